#pragma once

// The fixed test corpus: every symbolic result gets checked against the
// brute-force oracle on these pairs. Shape constraints: free rank <= 2, at
// most one torsion factor drawn from {2, 3, 4, 6}, at most four list
// elements, coordinates in [-4, 4]. Pairs over free groups never contain
// the zero vector (such lists have identically-zero counting functions and
// are covered separately as loops); pairs with torsion may.

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gtutte/group.hpp"
#include "gtutte/int.hpp"

namespace testref {

struct CorpusPair {
  std::string name;
  gtutte::FgAbelianGroup gamma;
  gtutte::ElementList a;
};

inline const std::vector<CorpusPair>& corpus() {
  using gtutte::ElementList;
  using gtutte::FgAbelianGroup;
  using gtutte::Int;

  static const std::vector<CorpusPair> pairs = [] {
    std::vector<CorpusPair> out;
    auto add = [&out](std::string name, const std::string& group,
                      const std::vector<std::vector<Int>>& coords) {
      const FgAbelianGroup g = FgAbelianGroup::parse(group);
      out.push_back({std::move(name), g, ElementList(g, coords)});
    };

    add("z2z4-full", "Z^2 + Z/4", {{2, 2, 1}, {0, 2, 3}, {0, 0, 3}});
    add("z2z4-free-part", "Z^2 + Z/4", {{2, 2, 1}, {0, 2, 3}});
    add("cyclic4-generator", "Z/4", {{1}});
    add("cyclic2-generator", "Z/2", {{1}});
    add("cyclic6-split", "Z/6", {{2}, {3}});
    add("line-coloop", "Z", {{1}});
    add("line-empty", "Z", {});
    add("plane-three-lines", "Z^2", {{1, 0}, {0, 1}, {1, 1}});
    add("plane-even-pair", "Z^2", {{2, 2}, {4, 6}});
    add("mixed-torsion-only-element", "Z + Z/2", {{0, 1}});
    add("mixed-z-z3", "Z + Z/3", {{1, 1}, {2, 2}});
    add("mixed-z2-z6", "Z^2 + Z/6", {{1, 2, 3}, {0, 3, 2}, {2, 0, 0}});

    std::mt19937 rng(0x5eed2026u);
    const Int torsion_choices[] = {Int(2), Int(3), Int(4), Int(6)};
    for (std::size_t i = 0; out.size() < 212; ++i) {
      const std::size_t r = rng() % 3;
      const bool with_torsion = r == 0 || rng() % 2 == 0;
      std::vector<Int> factors;
      if (with_torsion) factors.push_back(torsion_choices[rng() % 4]);
      const FgAbelianGroup gamma(r, factors);

      const std::size_t n_elems = rng() % 5;
      std::vector<std::vector<Int>> coords;
      for (std::size_t e = 0; e < n_elems; ++e) {
        std::vector<Int> v(gamma.coord_size());
        for (;;) {
          bool all_zero = true;
          for (auto& c : v) {
            c = Int(static_cast<long>(rng() % 9) - 4);
            if (c != 0) all_zero = false;
          }
          if (!all_zero || !gamma.is_free()) break;
        }
        coords.push_back(std::move(v));
      }
      out.push_back({"random-" + std::to_string(i), gamma,
                     ElementList(gamma, coords)});
    }
    return out;
  }();
  return pairs;
}

}  // namespace testref
