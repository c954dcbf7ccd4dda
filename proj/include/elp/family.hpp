#pragma once

#include <cstddef>
#include <memory>

#include "elp/program.hpp"

namespace elp {

/// The propagation benchmark family, already in normal form (3n + 1 rules):
///
///   a_i :- not K not1_a_i.      (i = 1..n)
///   not1_a_i :- not a_i.
///   g :- a_i.
///   :- K g.
///
/// G0 has 2^n stable models on it, G1 has one; the only worldview is [{}].
/// Throws Errc::InvalidArgument for n = 0.
Program generatePropagationFamily(std::size_t n, std::shared_ptr<AtomTable> table = nullptr);

}  // namespace elp
