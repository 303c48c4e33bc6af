#include "isoschub/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace isoschub {

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (p > 0 && parts[p] > parts[p - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  parts_ = std::move(parts);
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    auto e = item.find_last_not_of(" \t");
    std::string tok = item.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition entry '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("bad partition entry '" + tok + "'");
    parts.push_back(v);
  }
  return Partition(parts);
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::is_strict() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

bool Partition::contains(const Partition& J) const {
  if (J.length() > length()) return false;
  for (int p = 0; p < J.length(); ++p)
    if (J.parts_[p] > parts_[p]) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int v : parts_)
    for (int k = 0; k < v; ++k) ++c[k];
  return Partition(c);
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t p = 0; p < parts_.size(); ++p) {
    if (p) out += ',';
    out += std::to_string(parts_[p]);
  }
  return out;
}

Partition rho(int k) {
  if (k < 0) throw std::invalid_argument("rho: k must be nonnegative");
  std::vector<int> v;
  for (int i = k; i >= 1; --i) v.push_back(i);
  return Partition(v);
}

Partition rho_complement(const Partition& I, int k) {
  if (!I.is_strict()) throw std::invalid_argument("rho_complement: I must be strict");
  if (!rho(k).contains(I)) throw std::invalid_argument("rho_complement: I not contained in rho_k");
  std::set<int> parts(I.parts().begin(), I.parts().end());
  std::vector<int> out;
  for (int v = k; v >= 1; --v)
    if (!parts.count(v)) out.push_back(v);
  return Partition(out);
}

std::vector<Partition> horizontal_strips(const Partition& I, int r, int max_part) {
  std::vector<Partition> out;
  if (r < 0) return out;
  const int len = I.length();
  std::vector<int> j(len + 1, 0);
  // Row p may grow from i_p up to i_{p-1} (max_part for the first row).
  std::function<void(int, int)> rec = [&](int p, int left) {
    if (p == len + 1) {
      if (left == 0) out.emplace_back(j);
      return;
    }
    int lo = I[p];
    int hi = (p == 0) ? max_part : I[p - 1];
    for (int v = std::min(hi, lo + left); v >= lo; --v) {
      j[p] = v;
      rec(p + 1, left - (v - lo));
    }
  };
  if (max_part < I[0]) return out;
  rec(0, r);
  return out;
}

bool is_horizontal_strip(const Partition& I, const Partition& J) {
  if (!J.contains(I)) return false;
  for (int p = 0; p + 1 < J.length(); ++p)
    if (J[p + 1] > I[p]) return false;
  return true;
}

int strip_components_off_first_column(const Partition& I, const Partition& J) {
  // Each nonempty row segment of J/I is a box range (I[p], J[p]]. Segments
  // on consecutive rows join when their column ranges abut, which is when
  // the union has interval row and column projections.
  struct Seg {
    int row, lo, hi;
  };
  std::vector<Seg> segs;
  for (int p = 0; p < J.length(); ++p)
    if (J[p] > I[p]) segs.push_back({p, I[p] + 1, J[p]});
  int count = 0;
  std::size_t s = 0;
  while (s < segs.size()) {
    int min_col = segs[s].lo;
    std::size_t t = s;
    while (t + 1 < segs.size() && segs[t + 1].row == segs[t].row + 1 &&
           segs[t + 1].hi + 1 >= segs[t].lo) {
      ++t;
      min_col = std::min(min_col, segs[t].lo);
    }
    if (min_col > 1) ++count;
    s = t + 1;
  }
  return count;
}

PieriMultiplicity pieri_multiplicity(const Partition& I, const Partition& J) {
  if (!is_horizontal_strip(I, J))
    throw std::invalid_argument("pieri_multiplicity: J/I is not a horizontal strip");
  PieriMultiplicity res;
  for (int p = 0; p < I.length(); ++p)
    if (J[p + 1] < I[p] && I[p] < J[p]) ++res.m;
  res.meets_first_column = J.length() > I.length();
  if (I.is_strict() && res.m != strip_components_off_first_column(I, J))
    throw std::logic_error("pieri_multiplicity: characterizations disagree");
  return res;
}

std::vector<Partition> partitions_of(int w, int max_part, int max_len) {
  std::vector<Partition> out;
  if (w < 0) return out;
  if (max_part < 0 || max_part > w) max_part = w;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_len >= 0 && static_cast<int>(cur.size()) >= max_len) return;
    for (int v = std::min(left, cap); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(w, max_part);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight, int max_part, int max_len) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w)
    for (auto& p : partitions_of(w, max_part, max_len)) out.push_back(p);
  return out;
}

std::vector<Partition> strict_subsets_of_rho(int k) {
  std::vector<Partition> out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> v;
    for (int i = k; i >= 1; --i)
      if (mask & (1u << (i - 1))) v.push_back(i);
    out.emplace_back(v);
  }
  std::sort(out.begin(), out.end(), LengthThenLexGreater{});
  return out;
}

Partition sorted_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(parts);
}

}  // namespace isoschub
