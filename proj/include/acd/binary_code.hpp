#ifndef ACD_BINARY_CODE_HPP
#define ACD_BINARY_CODE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "acd/f2linalg.hpp"

namespace acd {

/**
 * Binary linear [n, k] code given by a rank-k generator matrix. Rows passed to
 * from_generator that are dependent on earlier rows are dropped; the kept rows
 * are stored unmodified. Values are immutable; all queries are pure.
 */
class BinaryCode {
  public:
    BinaryCode() = default;  // the [0, 0] code

    static BinaryCode from_generator(const F2Matrix& rows);
    static BinaryCode zero(size_t n);
    static BinaryCode full(size_t n);

    size_t length() const { return n_; }
    size_t dim() const { return k_; }
    const F2Matrix& generator() const { return gen_; }

    /// The [n, n-k] dual code (generator = nullspace basis of the generator).
    BinaryCode dual() const;

    /// True iff G G^T is invertible over GF(2), i.e. the code meets its dual
    /// only in zero.
    bool is_lcd() const;

    /// True iff n = 2k and every pair of generator rows is orthogonal.
    bool is_self_dual() const;

    /**
     * A direct complement D: dim D = n-k, C ∩ D = {0}, C + D = F2^n. Built by
     * extending the code's basis with standard unit vectors in ascending index
     * order, so the result is deterministic.
     */
    BinaryCode complement() const;

    /// Exact minimum distance by codeword enumeration; nullopt for the zero
    /// code. Throws LimitExceeded when k exceeds `max_k`.
    std::optional<size_t> min_distance(size_t max_k = kDefaultEnumLimit) const;

    /// Exact weight distribution A_0..A_n by codeword enumeration.
    std::vector<uint64_t> weight_distribution(size_t max_k = kDefaultEnumLimit) const;

    /// True iff the cyclic shift of every generator row stays in the code.
    bool is_cyclic() const;

    bool contains(const F2Vector& v) const;

    /// Set equality (same span).
    friend bool operator==(const BinaryCode& x, const BinaryCode& y) {
        return x.n_ == y.n_ && x.canon_ == y.canon_;
    }

    static constexpr size_t kDefaultEnumLimit = 28;

  private:
    size_t n_ = 0;
    size_t k_ = 0;
    F2Matrix gen_;    // k x n, rank k
    F2Matrix canon_;  // RREF of gen_ (canonical for the span)
    std::vector<size_t> pivots_;
};

}  // namespace acd

#endif
