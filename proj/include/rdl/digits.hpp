#pragma once

#include <optional>
#include <vector>

#include "rdl/errors.hpp"
#include "rdl/rational.hpp"

namespace rdl {

/// A base together with the digits an expansion may use. Describes both the
/// integer set B (nonnegative integers whose base-p digits all lie in the
/// allowed set) and the fractional set A (the closed subset of [0,1] of values
/// sum d_i p^-i with every d_i allowed).
struct DigitSetSpec {
    int base = 3;
    std::vector<int> digits{0, 1};  // ascending, unique, each in [0, base)
    bool include_zero = false;      // whether the integer 0 counts as a member of B

    DigitSetSpec() = default;
    DigitSetSpec(int base_, std::vector<int> digits_, bool include_zero_ = false);

    bool allows(int digit) const;
    std::vector<int> positive_digits() const;

    // Extremes of the fractional set A: all-min and all-max digit tails.
    Rat frac_min() const;  // min(D)/(base-1)
    Rat frac_max() const;  // max(D)/(base-1)

    // log|D| / log base
    double dimension() const;
};

/// Base-p digits of n, most significant first. n = 0 gives the empty vector.
std::vector<int> digits_of(const Nat& n, int base);
Nat value_of_digits(const std::vector<int>& ds, int base);

/// Every base-p digit of n allowed; n = 0 answers spec.include_zero.
bool is_member(const Nat& n, const DigitSetSpec& spec);

/// k-th smallest member, 0-indexed. With include_zero the member 0 has rank 0.
Nat unrank(const Nat& k, const DigitSetSpec& spec);

/// Inverse of unrank. Throws NotAMember when n is not in the set.
Nat rank(const Nat& n, const DigitSetSpec& spec);

/// Exact #{ members in [1, N] }. Zero is never counted here.
Nat count_upto(const Nat& n, const DigitSetSpec& spec);

/// Smallest integer member >= x, or nullopt when none exists (only possible
/// for digit sets without positive digits).
std::optional<Nat> successor_int(const Rat& x, const DigitSetSpec& spec);

/// A point of A at finite depth: value = sum digits[i] * base^-(i+1).
struct FracPoint {
    int base = 3;
    std::vector<int> digits;

    int depth() const { return static_cast<int>(digits.size()); }
    Rat value() const;
    bool valid_for(const DigitSetSpec& spec) const;
    /// Fractional part of base * value: the digit left-shift.
    FracPoint shifted() const;
};

/// Eventually periodic expansion sum d_i p^-i; period is nonempty and repeats
/// forever after the preperiod. value is the exact rational it denotes.
struct PeriodicExpansion {
    int base = 3;
    std::vector<int> preperiod;
    std::vector<int> period;
    Rat value;
};

/// Smallest element of the closed fractional set A that is >= x, or nullopt
/// when x exceeds frac_max().
std::optional<PeriodicExpansion> successor_frac(const Rat& x, const DigitSetSpec& spec);

/// Does A intersect the half-open interval [lo, hi)? Decides exactly the same
/// predicate as "successor_frac(lo) exists and is < hi", by exact interval
/// subdivision (the recursion terminates because widths grow by a factor of
/// base each level).
bool frac_interval_meets(const DigitSetSpec& spec, const Rat& lo, const Rat& hi);

}  // namespace rdl
