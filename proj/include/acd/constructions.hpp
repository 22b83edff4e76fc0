#ifndef ACD_CONSTRUCTIONS_HPP
#define ACD_CONSTRUCTIONS_HPP

#include "acd/additive_code.hpp"
#include "acd/binary_code.hpp"

namespace acd {

/**
 * A binary LCD [n, k, d] code viewed over GF(4) as a linear code, taken
 * additively: a trace-Hermitian ACD (n, 2^{2k}, d) code.
 * Throws PreconditionError when the input is not LCD.
 */
AdditiveCode lift_binary_lcd(const BinaryCode& c2);

/**
 * The additive code a*C + b*D generated by the scaled rows of both binary
 * codes. Requires a, b nonzero and distinct (so the sum has size |C|*|D| and
 * k = k1 + k2); lengths must match.
 */
AdditiveCode mix(Gf4 a, const BinaryCode& c, Gf4 b, const BinaryCode& d);

/**
 * a*C + b*complement(C) for a binary self-dual C: a trace-Hermitian ACD
 * (2n, 2^{2n}) code whose minimum distance is min{d(C), d(complement)}.
 * Throws PreconditionError when C is not self-dual or the scalars are bad.
 */
AdditiveCode self_dual_complement_acd(const BinaryCode& c, Gf4 a, Gf4 b);

/**
 * w*C + w^2*D for binary LCD codes C, D of the same length: a trace-Euclidean
 * ACD (n, 2^{k1+k2}) code. Throws PreconditionError when either input is not
 * LCD.
 */
AdditiveCode mix_lcd_pair(const BinaryCode& c, const BinaryCode& d);

/**
 * Folds a binary [2n, k] code with generator [A|B] (A = first n columns) into
 * the additive (n, 2^k) code with generator w*A + w^2*B. The result is
 * trace-Euclidean ACD iff the input is LCD. Throws PreconditionError on odd
 * length.
 */
AdditiveCode fold(const BinaryCode& c1);

/**
 * Unfolds an additive (n, 2^k) code into the binary [2n, k] code with
 * generator [Tr(w*G) | Tr(w^2*G)] (entrywise traces, concatenated). The result
 * is LCD iff the input is trace-Euclidean ACD; unfold(fold(c)) = c.
 */
BinaryCode unfold(const AdditiveCode& c);

}  // namespace acd

#endif
