#include "radlie/enumerate.hpp"

#include <fmt/format.h>

namespace radlie {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; }

}  // namespace

std::uint64_t subspace_count(std::uint64_t q, std::size_t n) {
  // Gaussian binomials via the row recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<std::uint64_t> row{1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<std::uint64_t> next(m + 1, 0);
    std::uint64_t qk = 1;
    for (std::size_t k = 0; k <= m; ++k) {
      std::uint64_t v = k < row.size() ? sat_mul(qk, row[k]) : 0;
      if (k > 0) v = sat_add(v, row[k - 1]);
      next[k] = v;
      qk = sat_mul(qk, q);
    }
    row = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto v : row) total = sat_add(total, v);
  return total;
}

void for_each_subspace(const PrimeField& f, std::size_t n, std::uint64_t cap,
                       const std::function<bool(const Subspace<PrimeField>&)>& fn) {
  const std::uint64_t count = subspace_count(f.modulus(), n);
  if (count > cap)
    throw CapacityError(fmt::format("subspace enumeration of GF({})^{} needs {} subspaces, cap is {}", f.modulus(), n,
                                    count == UINT64_MAX ? std::string("> 2^64") : std::to_string(count), cap));
  const std::uint32_t q = f.modulus();
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
      // Free positions: (row r, column c) with c > piv[r] and c not a pivot.
      std::vector<std::pair<std::size_t, std::size_t>> free;
      std::vector<bool> is_piv(n, false);
      for (auto p : piv) is_piv[p] = true;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = piv[r] + 1; c < n; ++c)
          if (!is_piv[c]) free.emplace_back(r, c);
      std::vector<std::uint32_t> val(free.size(), 0);
      while (true) {
        std::vector<Vec<PrimeField>> rows(k, Vec<PrimeField>(n, 0));
        for (std::size_t r = 0; r < k; ++r) rows[r][piv[r]] = 1;
        for (std::size_t t = 0; t < free.size(); ++t) rows[free[t].first][free[t].second] = val[t];
        if (!fn(Subspace<PrimeField>::span(f, n, rows))) return;
        std::size_t t = 0;
        while (t < val.size() && val[t] == q - 1) val[t++] = 0;
        if (t == val.size()) break;
        ++val[t];
      }
      // Next k-combination of {0..n-1}.
      std::size_t i = k;
      while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
}

SubspaceLattice enumerate_lattice(const LieAlgebra<PrimeField>& L, std::uint64_t cap) {
  SubspaceLattice lat;
  for_each_subspace(L.field(), L.dim(), cap, [&](const Subspace<PrimeField>& s) {
    if (is_subalgebra(L, s)) {
      lat.subalgebras.push_back(s);
      if (is_ideal(L, s)) lat.ideals.push_back(s);
    }
    return true;
  });
  return lat;
}

std::vector<Subspace<PrimeField>> maximal_subalgebras(const LieAlgebra<PrimeField>& L, const SubspaceLattice& lat) {
  std::vector<const Subspace<PrimeField>*> order;
  for (const auto& s : lat.subalgebras)
    if (s.dim() < L.dim()) order.push_back(&s);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->dim() > b->dim(); });
  std::vector<Subspace<PrimeField>> out;
  for (auto* s : order) {
    bool inside = false;
    for (const auto& m : out)
      if (m.dim() > s->dim() && m.contains(*s)) {
        inside = true;
        break;
      }
    if (!inside) out.push_back(*s);
  }
  return out;
}

OracleValues oracle_values(const LieAlgebra<PrimeField>& L, const SubspaceLattice& lat) {
  OracleValues o{L.zero_space(), L.zero_space(), L.full_space(), L.zero_space(), L.zero_space(), {}};
  for (const auto& i : lat.ideals) {
    if (nilpotency_class(L, i)) o.nilradical = o.nilradical + i;
    if (derived_length(L, i)) o.radical = o.radical + i;
  }
  for (const auto& m : maximal_subalgebras(L, lat)) o.frattini_subalgebra = o.frattini_subalgebra.intersect(m);
  if (L.dim() == 0) o.frattini_subalgebra = L.zero_space();
  for (const auto& i : lat.ideals)
    if (o.frattini_subalgebra.contains(i)) o.frattini = o.frattini + i;
  for (const auto& i : lat.ideals) {
    if (i.is_zero()) continue;
    bool minimal = true;
    for (const auto& j : lat.ideals)
      if (!j.is_zero() && j.dim() < i.dim() && i.contains(j)) {
        minimal = false;
        break;
      }
    if (minimal) {
      o.minimal_ideals.push_back(i);
      o.socle = o.socle + i;
    }
  }
  return o;
}

}  // namespace radlie
