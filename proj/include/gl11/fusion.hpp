#pragma once

#include "gl11/labels.hpp"
#include "gl11/oracle.hpp"

namespace gl11 {

/// Fusion product of two labels. Defined for simple x simple,
/// simple x projective and projective x projective; reducible Verma inputs
/// throw Undetermined. Parity markers are not propagated.
FormalSum fuse(const ModuleLabel &a, const ModuleLabel &b);

/// Bilinear extension of fuse.
FormalSum fuse_formal(const FormalSum &a, const FormalSum &b);

/// True iff fusion of a and b descends to the Grothendieck group: the
/// composition factors of a x b equal those of the factor-wise product.
bool k_ring_check(const ModuleLabel &a, const ModuleLabel &b);

/// Finite gl(1|1)-module sitting at the lowest conformal weight of a label,
/// at level k (e = k * ehat).
FinLabel top_space(const ModuleLabel &label, const Rational &k = Rational(1));
FinMultiset top_space(const FormalSum &sum, const Rational &k = Rational(1));

} // namespace gl11
