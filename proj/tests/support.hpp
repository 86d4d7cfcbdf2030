#pragma once

#include <stdexcept>
#include <string>

#include "radlie/corpus.hpp"

namespace radlie::test {

inline AlgebraDoc fixture(const std::string& name) {
  for (auto& d : builtin_corpus())
    if (d.name == name) return d;
  throw std::runtime_error("no fixture " + name);
}

template <class K>
LieAlgebra<K> fixture_algebra(const std::string& name) {
  return std::get<LieAlgebra<K>>(fixture(name).algebra);
}

template <class K>
Vec<K> vec_of(const K& f, std::initializer_list<int> xs) {
  Vec<K> v;
  for (int x : xs) v.push_back(f.from_int(x));
  return v;
}

template <class K>
Subspace<K> span_of(const LieAlgebra<K>& L, std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Vec<K>> vs;
  for (auto r : rows) vs.push_back(vec_of(L.field(), r));
  return L.span(vs);
}

}  // namespace radlie::test
