// General-coefficient Chevalley-Eilenberg differential
//   d = c^i ad_{rho(e_i)} - 1/2 f_ij^k c^i c^j d/dc^k
// templated over the matrix type so the floating and exact-rational paths run
// through the same code. Koszul convention: c's anticommute, d/dc^k is a left
// derivation, insertion signs count hops past smaller indices.
#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "cecoh/types.hpp"

namespace cecoh {

// scalar type used for structure constants; exact path specializes this
template <class MatT>
struct real_scalar_of {
  using type = double;
};

template <class MatT>
struct LieAlgebraData {
  using FScalar = typename real_scalar_of<MatT>::type;
  int dim_g = 0;
  std::vector<FScalar> f;  // flat, index (i*dim_g + j)*dim_g + k
  std::vector<MatT> rep;   // rho(e_i)

  const FScalar& fc(int i, int j, int k) const {
    return f[(static_cast<size_t>(i) * dim_g + j) * dim_g + k];
  }
  FScalar& fc(int i, int j, int k) {
    return f[(static_cast<size_t>(i) * dim_g + j) * dim_g + k];
  }
};

template <class MatT>
struct GeneralCochain {
  int degree = 0;
  // strictly increasing index tuples -> representation-space endomorphisms
  std::map<std::vector<int>, MatT> components;
};

namespace detail {

// sorted insert of index i; sign = (-1)^{# elements smaller than i}
inline std::pair<std::vector<int>, int> wedge_insert(const std::vector<int>& idx, int i) {
  std::vector<int> out;
  out.reserve(idx.size() + 1);
  int hops = 0;
  for (int v : idx) {
    if (v < i) {
      out.push_back(v);
      ++hops;
    }
  }
  out.push_back(i);
  for (int v : idx) {
    if (v > i) out.push_back(v);
  }
  return {out, hops % 2 == 0 ? 1 : -1};
}

}  // namespace detail

template <class MatT>
GeneralCochain<MatT> d_general(const GeneralCochain<MatT>& c,
                               const LieAlgebraData<MatT>& g) {
  if (g.dim_g < 1 || g.dim_g > 8) {
    throw InputError("d_general: dim_g must lie in [1, 8]");
  }
  if (static_cast<int>(g.rep.size()) != g.dim_g ||
      g.f.size() != static_cast<size_t>(g.dim_g) * g.dim_g * g.dim_g) {
    throw InputError("d_general: algebra data sized inconsistently with dim_g");
  }
  if (c.degree < 0 || c.degree > g.dim_g) {
    throw InputError("d_general: degree must lie in [0, dim_g]");
  }
  // top degree maps to the zero space: the loops below produce no terms

  GeneralCochain<MatT> out;
  out.degree = c.degree + 1;
  auto add = [&out](const std::vector<int>& idx, MatT m) {
    auto it = out.components.find(idx);
    if (it == out.components.end()) {
      out.components.emplace(idx, std::move(m));
    } else {
      it->second = it->second + m;
    }
  };

  using FScalar = typename real_scalar_of<MatT>::type;
  for (const auto& [idx, m] : c.components) {
    if (static_cast<int>(idx.size()) != c.degree ||
        !std::is_sorted(idx.begin(), idx.end()) ||
        std::adjacent_find(idx.begin(), idx.end()) != idx.end() ||
        (!idx.empty() && (idx.front() < 0 || idx.back() >= g.dim_g))) {
      throw InputError("d_general: malformed index tuple");
    }

    // c^i ad_{rho(e_i)}
    for (int i = 0; i < g.dim_g; ++i) {
      if (std::find(idx.begin(), idx.end(), i) != idx.end()) continue;
      auto [J, sign] = detail::wedge_insert(idx, i);
      MatT comm = g.rep[i] * m - m * g.rep[i];
      if (sign < 0) comm = -comm;
      add(J, std::move(comm));
    }

    // -1/2 f_ij^k c^i c^j d/dc^k; i<j pairs absorb the 1/2 by antisymmetry
    for (size_t t = 0; t < idx.size(); ++t) {
      const int k = idx[t];
      std::vector<int> rest;
      rest.reserve(idx.size() - 1);
      for (size_t u = 0; u < idx.size(); ++u) {
        if (u != t) rest.push_back(idx[u]);
      }
      const int deriv_sign = (t % 2 == 0) ? 1 : -1;
      for (int i = 0; i < g.dim_g; ++i) {
        if (std::find(rest.begin(), rest.end(), i) != rest.end()) continue;
        for (int j = i + 1; j < g.dim_g; ++j) {
          if (std::find(rest.begin(), rest.end(), j) != rest.end()) continue;
          const FScalar& fv = g.fc(i, j, k);
          if (fv == FScalar(0)) continue;
          auto [J1, s1] = detail::wedge_insert(rest, j);
          auto [J2, s2] = detail::wedge_insert(J1, i);
          const int sign = -deriv_sign * s1 * s2;
          add(J2, MatT((sign > 0 ? fv : FScalar(-fv)) * m));
        }
      }
    }
  }
  return out;
}

}  // namespace cecoh
