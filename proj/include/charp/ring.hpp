// Copyright 2026 the charp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHARP_RING_HPP
#define CHARP_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "charp/errors.hpp"
#include "charp/fp.hpp"
#include "charp/monomial.hpp"

namespace charp {

/// Ambient polynomial ring descriptor F_p[vars] with a fixed monomial order.
/// Immutable after construction; shared by value types through RingPtr.
/// Variable names are metadata; identity is positional.
struct Ring {
  std::uint32_t p = 2;
  std::vector<std::string> vars;
  MonomialOrder order = MonomialOrder::grevlex();

  Ring(std::uint32_t p_, std::vector<std::string> vars_,
       MonomialOrder order_ = MonomialOrder::grevlex())
      : p(p_), vars(std::move(vars_)), order(order_) {
    if (!is_prime(p)) throw structure_error("p must be prime");
    if (vars.empty()) throw structure_error("ring needs at least one variable");
    if (vars.size() > kMaxVars)
      throw budget_error("too many variables (max 16)");
  }

  std::size_t nvars() const { return vars.size(); }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return int(i);
    return -1;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars,
                         MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const Ring>(p, std::move(vars), order);
}

/// Structural compatibility: same modulus, same variables, same order.
inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  return a->p == b->p && a->vars == b->vars && a->order == b->order;
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw structure_error("ring tag mismatch");
}

inline RingPtr with_order(const RingPtr& r, MonomialOrder order) {
  return make_ring(r->p, r->vars, order);
}

}  // namespace charp

#endif  // CHARP_RING_HPP
