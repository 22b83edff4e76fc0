#ifndef ACD_ADDITIVE_CODE_HPP
#define ACD_ADDITIVE_CODE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "acd/f4linalg.hpp"

namespace acd {

/// The two GF(2)-valued inner products on GF(4)^n.
enum class Form {
    TraceHermitian,  // x ⋆ y = Σ Tr(x_i * conj(y_i))
    TraceEuclidean,  // x ⋄ y = Σ Tr(x_i * y_i)
};

const char* form_name(Form f);

/// Hermitian inner product Σ x_i * conj(y_i), GF(4)-valued.
Gf4 inner_hermitian(const Gf4Vector& x, const Gf4Vector& y);

/// Σ Tr(x_i * conj(y_i)). In bit planes: Σ a1*b2 + a2*b1 (symplectic form).
bool inner_trace_hermitian(const Gf4Vector& x, const Gf4Vector& y);

/// Σ Tr(x_i * y_i). In bit planes: Σ a1*b2 + a2*b1 + b1*b2.
bool inner_trace_euclidean(const Gf4Vector& x, const Gf4Vector& y);

/**
 * Additive (n, 2^k) code over GF(4): a subgroup of GF(4)^n closed under
 * addition, given by a k x n generator matrix of 2-rank exactly k. Codewords
 * are the GF(2)-combinations of the generator rows. Immutable; queries pure.
 */
class AdditiveCode {
  public:
    AdditiveCode() = default;  // (0, 2^0)

    /// Builds the code spanned by the given rows. Rows dependent (over GF(2))
    /// on earlier rows are dropped; kept rows are stored unmodified.
    static AdditiveCode from_generator(const F4Matrix& rows);
    static AdditiveCode from_generator(const std::vector<Gf4Vector>& rows, size_t n);

    /// The GF(4)-linear code with the given basis, viewed additively: the
    /// generator is the basis rows followed by their w-multiples, so k = 2r.
    static AdditiveCode from_linear(const F4Matrix& gen4);

    static AdditiveCode zero(size_t n);
    static AdditiveCode full(size_t n);

    size_t length() const { return n_; }
    size_t k() const { return k_; }
    const F4Matrix& generator() const { return gen_; }

    /// The (n, 2^{2n-k}) dual under the chosen form.
    AdditiveCode dual(Form form) const;

    /// k x k binary Gram matrix of the generator rows under the chosen form.
    F2Matrix gram(Form form) const;

    /// True iff gram(form) is invertible over GF(2), i.e. the code meets its
    /// dual under `form` only in zero. The zero code counts as ACD (0x0 Gram).
    bool is_acd(Form form) const;

    /**
     * Orthogonal projection onto the code with respect to the trace Euclidean
     * form: idempotent, fixes the code, annihilates the dual. Requires
     * is_acd(TraceEuclidean); throws PreconditionError otherwise.
     */
    Gf4Vector projection(const Gf4Vector& v) const;

    std::vector<uint64_t> weight_distribution(size_t max_k = kDefaultEnumLimit) const;
    std::optional<size_t> min_distance(size_t max_k = kDefaultEnumLimit) const;

    /// All 2^k codewords (GF(2)-combinations of generator rows).
    std::vector<Gf4Vector> codewords(size_t max_k = kDefaultEnumLimit) const;

    bool contains(const Gf4Vector& v) const;

    /// True iff the code is GF(4)-linear (w times every generator row stays in
    /// the code).
    bool is_linear() const;

    /**
     * Order of the permutation automorphism group by exhaustive search over
     * coordinate permutations, pruned on per-column symbol-count profiles.
     * Throws LimitExceeded when n exceeds `max_n`.
     */
    uint64_t paut_order(size_t max_n = kDefaultPautLimit) const;

    /// Set equality (same span). Codes of different length are unequal.
    friend bool operator==(const AdditiveCode& x, const AdditiveCode& y) {
        return x.n_ == y.n_ && x.canon_ == y.canon_;
    }

    static constexpr size_t kDefaultEnumLimit = 28;
    static constexpr size_t kDefaultPautLimit = 8;

  private:
    size_t n_ = 0;
    size_t k_ = 0;
    F4Matrix gen_;    // k x n, 2-rank k
    F2Matrix canon_;  // RREF of the k x 2n binary expansion
    std::vector<size_t> pivots_;
};

}  // namespace acd

#endif
