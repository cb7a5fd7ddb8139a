#ifndef IDEALKIT_SLICE_HPP
#define IDEALKIT_SLICE_HPP

#include "idealkit/field.hpp"

#include <string>
#include <vector>

namespace idealkit {

enum class DiscriminantSign { Positive, Zero, Negative };

struct SliceClassification {
    DiscriminantSign sign;
    int real_branches;  // 1 / 2 / 3 for Positive / Zero / Negative
};

/// Classifies the real slice t = t0 of x^6 + x^4*z*t + z^3 = 0 by the
/// exact sign of 4*t0^3 + 27 (the depressed z-cubic z^3 + t0*x^4*z + x^6
/// has discriminant -x^12*(4*t0^3 + 27)). t0 may be rational or an
/// element of a QQ-extension with a unique real embedding.
SliceClassification classify_slice(const FieldElem& t0);

/// Exact sign of a under the unique real embedding of its field; requires
/// a rational or an element of QQ[a]/(m) where m has exactly one real root.
int real_embedding_sign(const FieldElem& a);

struct RootInterval {
    Rational lo, hi;  // lo == hi for an exact rational root
};

/// Real roots of z^3 + p*z + q, ascending, each isolated to an interval
/// of width at most `width` by sign-change bisection on exact rational
/// evaluations. Requires a squarefree cubic (4p^3 + 27q^2 != 0) unless
/// p == q == 0, which yields the single exact root 0.
std::vector<RootInterval> real_roots_cubic(const Rational& p, const Rational& q,
                                           const Rational& width);

struct SliceSample {
    Rational x;
    int branch;  // ascending in z
    RootInterval z;
};

/// Sample rows of the slice t = t0 over x in [x_min, x_max] with the given
/// step; each row brackets one real z-branch to width 2^-40.
std::vector<SliceSample> emit_slice_samples(const Rational& t0, const Rational& x_min,
                                            const Rational& x_max, const Rational& step);

/// TSV with header `x  branch  z_lo  z_hi` (decimal rendering of the
/// exact interval endpoints).
std::string slice_samples_tsv(const std::vector<SliceSample>& samples);

}  // namespace idealkit

#endif
