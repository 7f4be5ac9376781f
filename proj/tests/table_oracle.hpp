#pragma once

// Hand-transcribed catalogue data, independent of the library's enumeration:
// the distinguished subset of each row in the row's own numbering, and the
// rows realizable in each ambient type used for regeneration.

#include <map>
#include <set>
#include <vector>

#include "sphmod/sphmod.hpp"

namespace sphmod::oracle {

/// Distinguished subset of a row as 1-based indices in the row's numbering;
/// r is the rank of the support.
inline std::vector<int> row_pi_sigma(int row, int r) {
  auto range = [](int from, int to) {
    std::vector<int> v;
    for (int i = from; i <= to; ++i) v.push_back(i);
    return v;
  };
  switch (row) {
    case 1:
    case 2:
    case 3:
    case 12: return {};
    case 4:
    case 6: return r == 2 ? std::vector<int>{} : range(2, r - 1);
    case 5: return {1, 3};
    case 7: return range(2, r);
    case 8: return {1, 2};
    case 9: return range(3, r);
    case 10: return range(2, r);
    case 11: return {1, 2, 3};
    case 13: return {2};
  }
  return {-1};
}

/// Expected distinguished subset of s, as sorted global 0-based indices.
inline std::vector<int> table_pi_sigma(const SphericalRoot& s) {
  std::vector<int> out;
  for (int k : row_pi_sigma(s.row, static_cast<int>(s.numbering.size()))) out.push_back(s.numbering[k - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::map<DynkinComponent, std::set<int>> expected_rows_by_type() {
  return {
      {{'A', 4}, {1, 2, 3, 4, 5}},
      {{'B', 4}, {1, 2, 3, 4, 5, 6, 7, 8}},
      {{'C', 4}, {1, 2, 3, 4, 5, 6, 7, 9}},
      {{'D', 4}, {1, 2, 3, 4, 5, 10}},
      {{'F', 4}, {1, 2, 3, 4, 6, 7, 8, 9, 11}},
      {{'G', 2}, {1, 2, 12, 13}},
  };
}

}  // namespace sphmod::oracle
