#include "radlie/lie_algebra.hpp"

#include <deque>

#include <fmt/format.h>

namespace radlie {

template <class K>
LieAlgebra<K>::LieAlgebra(K f, std::size_t n, std::vector<std::string> labels)
    : field_(std::move(f)), n_(n), labels_(std::move(labels)) {
  if (labels_.empty())
    for (std::size_t i = 0; i < n_; ++i) labels_.push_back(fmt::format("e{}", i + 1));
  if (labels_.size() != n_) throw InputError(fmt::format("expected {} basis labels, got {}", n_, labels_.size()));
  ad_.assign(n_, Matrix<K>(field_, n_, n_));
}

template <class K>
void LieAlgebra<K>::set_bracket(std::size_t i, std::size_t j, const Vec<K>& v) {
  if (i >= n_ || j >= n_) throw InputError(fmt::format("bracket index ({}, {}) out of range for dimension {}", i, j, n_));
  if (i == j) throw InputError(fmt::format("bracket [e{0}, e{0}] must be zero and cannot be set", i));
  if (v.size() != n_) throw InputError(fmt::format("bracket [{}, {}] has {} coefficients, expected {}", i, j, v.size(), n_));
  for (std::size_t k = 0; k < n_; ++k) {
    ad_[i](k, j) = v[k];
    ad_[j](k, i) = field_.neg(v[k]);
  }
}

template <class K>
Vec<K> LieAlgebra<K>::bracket(const Vec<K>& x, const Vec<K>& y) const {
  Vec<K> out = zero_vector();
  for (std::size_t i = 0; i < n_; ++i) {
    if (field_.is_zero(x[i])) continue;
    axpy(field_, out, x[i], ad_[i].apply(y));
  }
  return out;
}

template <class K>
Matrix<K> LieAlgebra<K>::ad(const Vec<K>& x) const {
  Matrix<K> m(field_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    if (!field_.is_zero(x[i])) m.add_scaled(x[i], ad_[i]);
  return m;
}

template <class K>
auto LieAlgebra<K>::jacobi_violation() const -> std::optional<JacobiFailure> {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = j + 1; k < n_; ++k) {
        const Vec<K> x = basis_vector(i), y = basis_vector(j), z = basis_vector(k);
        Vec<K> r = bracket(bracket(x, y), z);
        r = vec_add(field_, r, bracket(bracket(y, z), x));
        r = vec_add(field_, r, bracket(bracket(z, x), y));
        if (!is_zero_vec(field_, r)) return JacobiFailure{{i, j, k}, r};
      }
  return std::nullopt;
}

template <class K>
bool LieAlgebra<K>::same_table(const LieAlgebra& o) const {
  return field_ == o.field_ && n_ == o.n_ && ad_ == o.ad_;
}

// ---------------------------------------------------------------------------

template <class K>
Subspace<K> product_space(const LieAlgebra<K>& L, const Subspace<K>& u, const Subspace<K>& v) {
  Subspace<K> out = L.zero_space();
  const bool same = (u == v);
  for (std::size_t a = 0; a < u.dim(); ++a)
    for (std::size_t b = same ? a + 1 : 0; b < v.dim(); ++b) {
      out.add(L.bracket(u.basis()[a], v.basis()[b]));
      if (out.is_full()) return out;
    }
  return out;
}

template <class K>
bool is_subalgebra(const LieAlgebra<K>& L, const Subspace<K>& u) {
  for (std::size_t a = 0; a < u.dim(); ++a)
    for (std::size_t b = a + 1; b < u.dim(); ++b)
      if (!u.contains(L.bracket(u.basis()[a], u.basis()[b]))) return false;
  return true;
}

template <class K>
bool is_ideal(const LieAlgebra<K>& L, const Subspace<K>& u) {
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (const auto& v : u.basis())
      if (!u.contains(L.ad_basis(i).apply(v))) return false;
  return true;
}

template <class K>
bool is_perfect(const LieAlgebra<K>& L, const Subspace<K>& u) {
  return product_space(L, u, u) == u;
}

template <class K>
std::vector<Subspace<K>> lower_central_series(const LieAlgebra<K>& L, const Subspace<K>& s) {
  std::vector<Subspace<K>> terms{s};
  while (true) {
    Subspace<K> next = product_space(L, s, terms.back());
    if (next == terms.back()) return terms;
    terms.push_back(std::move(next));
  }
}

template <class K>
std::vector<Subspace<K>> derived_series(const LieAlgebra<K>& L, const Subspace<K>& s) {
  std::vector<Subspace<K>> terms{s};
  while (true) {
    Subspace<K> next = product_space(L, terms.back(), terms.back());
    if (next == terms.back()) return terms;
    terms.push_back(std::move(next));
  }
}

template <class K>
std::optional<std::size_t> nilpotency_class(const LieAlgebra<K>& L, const Subspace<K>& s) {
  auto terms = lower_central_series(L, s);
  if (!terms.back().is_zero()) return std::nullopt;
  return terms.size() - 1;
}

template <class K>
std::optional<std::size_t> derived_length(const LieAlgebra<K>& L, const Subspace<K>& s) {
  auto terms = derived_series(L, s);
  if (!terms.back().is_zero()) return std::nullopt;
  return terms.size() - 1;
}

template <class K>
Subspace<K> centraliser(const LieAlgebra<K>& L, const Subspace<K>& s) {
  const std::size_t n = L.dim();
  if (s.is_zero()) return L.full_space();
  Matrix<K> stacked(L.field(), n * s.dim(), n);
  for (std::size_t a = 0; a < s.dim(); ++a) {
    Matrix<K> m = L.ad(s.basis()[a]);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(a * n + r, c) = m(r, c);
  }
  return kernel(stacked);
}

template <class K>
Subspace<K> centre(const LieAlgebra<K>& L) {
  return centraliser(L, L.full_space());
}

template <class K>
Subspace<K> factor_centraliser(const LieAlgebra<K>& L, const Subspace<K>& a, const Subspace<K>& b) {
  const std::size_t n = L.dim();
  Matrix<K> stacked(L.field(), n * a.dim(), n);
  for (std::size_t t = 0; t < a.dim(); ++t) {
    Matrix<K> m = L.ad(a.basis()[t]);
    for (std::size_t c = 0; c < n; ++c) {
      Vec<K> col = b.reduce(m.column(c));
      for (std::size_t r = 0; r < n; ++r) stacked(t * n + r, c) = col[r];
    }
  }
  return kernel(stacked);
}

template <class K>
Subspace<K> spin(const LieAlgebra<K>& L, const std::vector<Vec<K>>& vs) {
  Subspace<K> s = L.zero_space();
  std::deque<Vec<K>> todo;
  for (const auto& v : vs)
    if (s.add(v)) todo.push_back(v);
  while (!todo.empty() && !s.is_full()) {
    Vec<K> w = std::move(todo.front());
    todo.pop_front();
    for (std::size_t i = 0; i < L.dim(); ++i) {
      Vec<K> u = L.ad_basis(i).apply(w);
      if (s.add(u)) todo.push_back(std::move(u));
    }
  }
  return s;
}

template <class K>
Subspace<K> ideal_closure(const LieAlgebra<K>& L, const Subspace<K>& s) {
  return spin(L, s.basis());
}

template <class K>
Subspace<K> core(const LieAlgebra<K>& L, const Subspace<K>& s) {
  const std::size_t n = L.dim();
  Subspace<K> x = s;
  while (!x.is_zero()) {
    const std::size_t k = x.dim();
    Matrix<K> m(L.field(), n * n, k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t i = 0; i < n; ++i) {
        Vec<K> r = x.reduce(L.ad_basis(i).apply(x.basis()[a]));
        for (std::size_t t = 0; t < n; ++t) m(i * n + t, a) = r[t];
      }
    Subspace<K> next = L.zero_space();
    for (const auto& c : kernel_basis(m)) next.add(x.combine(c));
    if (next.dim() == x.dim()) return x;
    x = std::move(next);
  }
  return x;
}

template <class K>
Matrix<K> killing_matrix(const LieAlgebra<K>& L) {
  const std::size_t n = L.dim();
  Matrix<K> g(L.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto t = (L.ad_basis(i) * L.ad_basis(j)).trace();
      g(i, j) = t;
      g(j, i) = t;
    }
  return g;
}

// ---- quotients and restrictions -------------------------------------------

template <class K>
Vec<K> Quotient<K>::push(const Vec<K>& v) const {
  Vec<K> r = kernel.reduce(v);
  Vec<K> out(complement.size());
  for (std::size_t a = 0; a < complement.size(); ++a) out[a] = r[complement[a]];
  return out;
}

template <class K>
Subspace<K> Quotient<K>::push(const Subspace<K>& s) const {
  Subspace<K> out = algebra.zero_space();
  for (const auto& v : s.basis()) out.add(push(v));
  return out;
}

template <class K>
Vec<K> Quotient<K>::lift(const Vec<K>& c) const {
  Vec<K> v = zero_vec(kernel.field(), kernel.ambient());
  for (std::size_t a = 0; a < complement.size(); ++a) v[complement[a]] = c[a];
  return v;
}

template <class K>
Subspace<K> Quotient<K>::pull(const Subspace<K>& s) const {
  Subspace<K> out = kernel;
  for (const auto& c : s.basis()) out.add(lift(c));
  return out;
}

template <class K>
Quotient<K> quotient(const LieAlgebra<K>& L, const Subspace<K>& ideal) {
  if (!is_ideal(L, ideal)) throw InputError("quotient: subspace is not an ideal");
  std::vector<std::size_t> comp = ideal.non_pivots();
  std::vector<std::string> labels;
  for (auto c : comp) labels.push_back(L.label(c));
  LieAlgebra<K> q(L.field(), comp.size(), labels);
  Quotient<K> out{std::move(q), ideal, comp};
  for (std::size_t a = 0; a < comp.size(); ++a)
    for (std::size_t b = a + 1; b < comp.size(); ++b) {
      Vec<K> v = out.push(L.basis_bracket(comp[a], comp[b]));
      if (!is_zero_vec(L.field(), v)) out.algebra.set_bracket(a, b, v);
    }
  return out;
}

template <class K>
Subspace<K> Restriction<K>::push(const Subspace<K>& s) const {
  Subspace<K> out = algebra.zero_space();
  for (const auto& v : s.basis()) out.add(push(v));
  return out;
}

template <class K>
Subspace<K> Restriction<K>::pull(const Subspace<K>& s) const {
  Subspace<K> out = Subspace<K>::zero(image.field(), image.ambient());
  for (const auto& c : s.basis()) out.add(lift(c));
  return out;
}

template <class K>
Restriction<K> restrict_to(const LieAlgebra<K>& L, const Subspace<K>& u) {
  if (!is_subalgebra(L, u)) throw InputError("restriction: subspace is not a subalgebra");
  const K& f = L.field();
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < u.dim(); ++a) {
    const auto& v = u.basis()[a];
    std::size_t nonzero = 0, where = 0;
    for (std::size_t t = 0; t < v.size(); ++t)
      if (!f.is_zero(v[t])) {
        ++nonzero;
        where = t;
      }
    labels.push_back(nonzero == 1 ? L.label(where) : fmt::format("u{}", a + 1));
  }
  Restriction<K> out{LieAlgebra<K>(f, u.dim(), labels), u};
  for (std::size_t a = 0; a < u.dim(); ++a)
    for (std::size_t b = a + 1; b < u.dim(); ++b) {
      Vec<K> c = u.coords(L.bracket(u.basis()[a], u.basis()[b]));
      if (!is_zero_vec(f, c)) out.algebra.set_bracket(a, b, c);
    }
  return out;
}

template <class K>
LieAlgebra<K> direct_sum(const LieAlgebra<K>& a, const LieAlgebra<K>& b) {
  if (!(a.field() == b.field())) throw InputError("direct sum of algebras over different fields");
  const std::size_t n = a.dim() + b.dim();
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l);
  for (const auto& l : b.labels()) labels.push_back(l + "'");
  LieAlgebra<K> s(a.field(), n, labels);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Vec<K> v = a.basis_bracket(i, j);
      v.resize(n, a.field().zero());
      s.set_bracket(i, j, v);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j) {
      Vec<K> w = b.basis_bracket(i, j);
      Vec<K> v = zero_vec(a.field(), a.dim());
      v.insert(v.end(), w.begin(), w.end());
      s.set_bracket(a.dim() + i, a.dim() + j, v);
    }
  return s;
}

template <class K>
LieAlgebra<K> change_basis(const LieAlgebra<K>& L, const Matrix<K>& p) {
  const std::size_t n = L.dim();
  Matrix<K> pinv = inverse(p);
  LieAlgebra<K> out(L.field(), n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) out.set_bracket(a, b, pinv.apply(L.bracket(p.column(a), p.column(b))));
  return out;
}

template <class K>
std::string format_vector(const LieAlgebra<K>& L, const Vec<K>& v) {
  const K& f = L.field();
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (f.is_zero(v[i])) continue;
    std::string c = f.format(v[i]);
    const bool negative = c.front() == '-';
    if (negative) c.erase(0, 1);
    if (!out.empty())
      out += negative ? " - " : " + ";
    else if (negative)
      out += "-";
    out += c == "1" ? L.label(i) : c + "*" + L.label(i);
  }
  return out.empty() ? "0" : out;
}

template <class K>
std::string format_subspace(const LieAlgebra<K>& L, const Subspace<K>& s) {
  if (s.is_zero()) return "0";
  std::string out = "<";
  for (std::size_t a = 0; a < s.dim(); ++a) {
    if (a) out += ", ";
    out += format_vector(L, s.basis()[a]);
  }
  return out + ">";
}

#define RADLIE_INST(K)                                                                                 \
  template class LieAlgebra<K>;                                                                        \
  template struct Quotient<K>;                                                                         \
  template struct Restriction<K>;                                                                      \
  template Subspace<K> product_space(const LieAlgebra<K>&, const Subspace<K>&, const Subspace<K>&);    \
  template bool is_subalgebra(const LieAlgebra<K>&, const Subspace<K>&);                               \
  template bool is_ideal(const LieAlgebra<K>&, const Subspace<K>&);                                    \
  template bool is_perfect(const LieAlgebra<K>&, const Subspace<K>&);                                  \
  template std::vector<Subspace<K>> lower_central_series(const LieAlgebra<K>&, const Subspace<K>&);    \
  template std::vector<Subspace<K>> derived_series(const LieAlgebra<K>&, const Subspace<K>&);          \
  template std::optional<std::size_t> nilpotency_class(const LieAlgebra<K>&, const Subspace<K>&);      \
  template std::optional<std::size_t> derived_length(const LieAlgebra<K>&, const Subspace<K>&);        \
  template Subspace<K> centre(const LieAlgebra<K>&);                                                   \
  template Subspace<K> centraliser(const LieAlgebra<K>&, const Subspace<K>&);                          \
  template Subspace<K> factor_centraliser(const LieAlgebra<K>&, const Subspace<K>&, const Subspace<K>&); \
  template Subspace<K> spin(const LieAlgebra<K>&, const std::vector<Vec<K>>&);                         \
  template Subspace<K> ideal_closure(const LieAlgebra<K>&, const Subspace<K>&);                        \
  template Subspace<K> core(const LieAlgebra<K>&, const Subspace<K>&);                                 \
  template Matrix<K> killing_matrix(const LieAlgebra<K>&);                                             \
  template Quotient<K> quotient(const LieAlgebra<K>&, const Subspace<K>&);                             \
  template Restriction<K> restrict_to(const LieAlgebra<K>&, const Subspace<K>&);                       \
  template LieAlgebra<K> direct_sum(const LieAlgebra<K>&, const LieAlgebra<K>&);                       \
  template LieAlgebra<K> change_basis(const LieAlgebra<K>&, const Matrix<K>&);                         \
  template std::string format_vector(const LieAlgebra<K>&, const Vec<K>&);                             \
  template std::string format_subspace(const LieAlgebra<K>&, const Subspace<K>&);
RADLIE_INST(Rationals)
RADLIE_INST(PrimeField)
#undef RADLIE_INST

}  // namespace radlie
