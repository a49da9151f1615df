#include "rdl/digits.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace rdl {

DigitSetSpec::DigitSetSpec(int base_, std::vector<int> digits_, bool include_zero_)
    : base(base_), digits(std::move(digits_)), include_zero(include_zero_) {
    if (base < 2) throw std::invalid_argument("DigitSetSpec: base must be >= 2");
    if (digits.empty()) throw std::invalid_argument("DigitSetSpec: digit set must be nonempty");
    std::sort(digits.begin(), digits.end());
    digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
    for (int d : digits) {
        if (d < 0 || d >= base) throw std::invalid_argument("DigitSetSpec: digit out of range");
    }
}

bool DigitSetSpec::allows(int digit) const {
    return std::binary_search(digits.begin(), digits.end(), digit);
}

std::vector<int> DigitSetSpec::positive_digits() const {
    std::vector<int> out;
    for (int d : digits)
        if (d > 0) out.push_back(d);
    return out;
}

Rat DigitSetSpec::frac_min() const { return make_rat(digits.front(), base - 1); }

Rat DigitSetSpec::frac_max() const { return make_rat(digits.back(), base - 1); }

double DigitSetSpec::dimension() const {
    return std::log(static_cast<double>(digits.size())) / std::log(static_cast<double>(base));
}

std::vector<int> digits_of(const Nat& n, int base) {
    std::vector<int> out;
    Nat m = n;
    while (m > 0) {
        out.push_back(static_cast<int>(mpz_fdiv_ui(m.get_mpz_t(), base)));
        m /= base;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Nat value_of_digits(const std::vector<int>& ds, int base) {
    Nat v = 0;
    for (int d : ds) v = v * base + d;
    return v;
}

bool is_member(const Nat& n, const DigitSetSpec& spec) {
    if (n == 0) return spec.include_zero;
    Nat m = n;
    while (m > 0) {
        int d = static_cast<int>(mpz_fdiv_ui(m.get_mpz_t(), spec.base));
        if (!spec.allows(d)) return false;
        m /= spec.base;
    }
    return true;
}

namespace {

// #members with exactly len digits: |D+| * |D|^(len-1)
Nat count_exact_len(const DigitSetSpec& spec, unsigned long len) {
    if (len == 0) return 0;
    Nat m(static_cast<unsigned long>(spec.digits.size()));
    Nat lead(static_cast<unsigned long>(spec.positive_digits().size()));
    return lead * pow_nat(m, len - 1);
}

int digit_index(const std::vector<int>& ds, int d) {
    auto it = std::lower_bound(ds.begin(), ds.end(), d);
    if (it == ds.end() || *it != d) return -1;
    return static_cast<int>(it - ds.begin());
}

}  // namespace

Nat unrank(const Nat& k, const DigitSetSpec& spec) {
    Nat t = k;
    if (spec.include_zero) {
        if (t == 0) return 0;
    } else {
        t += 1;
    }
    // t is now the 1-indexed rank among positive members.
    const auto dplus = spec.positive_digits();
    if (dplus.empty()) throw std::domain_error("unrank: digit set has no positive members");
    const Nat m(static_cast<unsigned long>(spec.digits.size()));

    unsigned long len = 1;
    Nat skipped = 0;
    for (;;) {
        Nat block = count_exact_len(spec, len);
        if (t <= skipped + block) break;
        skipped += block;
        ++len;
    }
    Nat r = t - skipped - 1;  // 0-indexed within the length block
    Nat tail_block = pow_nat(m, len - 1);
    Nat lead_idx = r / tail_block;
    Nat rest = r % tail_block;

    std::vector<int> out;
    out.push_back(dplus[lead_idx.get_ui()]);
    std::vector<int> rest_digits(len - 1, 0);
    for (unsigned long i = len - 1; i-- > 0;) {
        Nat q = rest % m;
        rest_digits[i] = spec.digits[q.get_ui()];
        rest /= m;
    }
    out.insert(out.end(), rest_digits.begin(), rest_digits.end());
    return value_of_digits(out, spec.base);
}

Nat rank(const Nat& n, const DigitSetSpec& spec) {
    if (!is_member(n, spec)) throw NotAMember("rank: " + n.get_str() + " is not a member");
    if (n == 0) return 0;  // reachable only with include_zero
    const auto ds = digits_of(n, spec.base);
    const auto dplus = spec.positive_digits();
    const Nat m(static_cast<unsigned long>(spec.digits.size()));
    const unsigned long len = ds.size();

    Nat t = 0;
    for (unsigned long j = 1; j < len; ++j) t += count_exact_len(spec, j);
    Nat idx(digit_index(dplus, ds[0]));
    t += idx * pow_nat(m, len - 1);
    Nat rest = 0;
    for (unsigned long i = 1; i < len; ++i) {
        rest = rest * m + digit_index(spec.digits, ds[i]);
    }
    t += rest + 1;
    return spec.include_zero ? t : t - 1;
}

Nat count_upto(const Nat& n, const DigitSetSpec& spec) {
    if (n <= 0) return 0;
    const auto ds = digits_of(n, spec.base);
    const auto dplus = spec.positive_digits();
    const Nat m(static_cast<unsigned long>(spec.digits.size()));
    const unsigned long len = ds.size();

    Nat total = 0;
    for (unsigned long j = 1; j < len; ++j) total += count_exact_len(spec, j);
    // members with exactly len digits that are <= n: walk tight prefixes
    bool tight = true;
    for (unsigned long i = 0; i < len && tight; ++i) {
        const auto& allowed = (i == 0) ? dplus : spec.digits;
        long below = 0;
        for (int d : allowed) {
            if (d < ds[i]) ++below;
        }
        total += Nat(below) * pow_nat(m, len - 1 - i);
        tight = std::binary_search(allowed.begin(), allowed.end(), ds[i]);
    }
    if (tight) total += 1;  // n itself
    return total;
}

std::optional<Nat> successor_int(const Rat& x, const DigitSetSpec& spec) {
    Nat n = x <= 0 ? Nat(0) : ceil_rat(x);
    if (n == 0) {
        if (spec.include_zero) return Nat(0);
        n = 1;
    }
    const auto dplus = spec.positive_digits();
    const int min_digit = spec.digits.front();
    auto ds = digits_of(n, spec.base);
    const unsigned long len = ds.size();

    // Smallest member with len+1 digits (used when no len-digit member >= n).
    auto next_length = [&]() -> std::optional<Nat> {
        if (dplus.empty()) return std::nullopt;
        std::vector<int> out(len + 1, min_digit);
        out[0] = dplus.front();
        return value_of_digits(out, spec.base);
    };

    std::vector<int> chosen(len, 0);
    // Greedy walk with backtracking: find the smallest fixed-length digit
    // string over the allowed sets that is >= the digits of n.
    long i = 0;
    while (i >= 0 && static_cast<unsigned long>(i) < len) {
        const auto& allowed = (i == 0) ? dplus : spec.digits;
        auto it = std::lower_bound(allowed.begin(), allowed.end(), ds[i]);
        if (it != allowed.end() && *it == ds[i]) {
            chosen[i] = ds[i];
            ++i;
            continue;
        }
        if (it != allowed.end()) {
            chosen[i] = *it;
            for (unsigned long j = i + 1; j < len; ++j) chosen[j] = min_digit;
            return value_of_digits(chosen, spec.base);
        }
        // Backtrack to the nearest position that can be bumped.
        --i;
        while (i >= 0) {
            const auto& al = (i == 0) ? dplus : spec.digits;
            auto jt = std::upper_bound(al.begin(), al.end(), chosen[i]);
            if (jt != al.end()) {
                chosen[i] = *jt;
                for (unsigned long j = i + 1; j < len; ++j) chosen[j] = min_digit;
                return value_of_digits(chosen, spec.base);
            }
            --i;
        }
    }
    if (i < 0) return next_length();
    return value_of_digits(chosen, spec.base);  // n itself is a member
}

Rat FracPoint::value() const {
    Rat v(0);
    Rat scale(1);
    for (int d : digits) {
        scale /= base;
        v += d * scale;
    }
    return v;
}

bool FracPoint::valid_for(const DigitSetSpec& spec) const {
    if (base != spec.base) return false;
    for (int d : digits)
        if (!spec.allows(d)) return false;
    return true;
}

FracPoint FracPoint::shifted() const {
    FracPoint out{base, {}};
    if (!digits.empty()) out.digits.assign(digits.begin() + 1, digits.end());
    return out;
}

std::optional<PeriodicExpansion> successor_frac(const Rat& x, const DigitSetSpec& spec) {
    const Rat min_a = spec.frac_min();
    const Rat max_a = spec.frac_max();
    const int p = spec.base;
    const int min_digit = spec.digits.front();

    if (x > max_a) return std::nullopt;

    PeriodicExpansion out;
    out.base = p;
    if (x <= min_a) {
        out.period = {min_digit};
        out.value = min_a;
        return out;
    }

    // Greedy digit construction on the residual target t: pick the smallest
    // digit whose subtree can still reach t, i.e. the smallest d with
    // (d + max_a)/p >= t. The residual sequence t -> p*t - d lives in a finite
    // set of rationals (denominators divide den(x)), so it either escapes
    // below min_a (all-min tail) or cycles (periodic tail).
    std::vector<int> ds;
    std::map<Rat, size_t> seen;
    Rat t = x;
    const size_t step_cap = 1u << 20;
    while (ds.size() < step_cap) {
        auto it = seen.find(t);
        if (it != seen.end()) {
            size_t start = it->second;
            out.preperiod.assign(ds.begin(), ds.begin() + start);
            out.period.assign(ds.begin() + start, ds.end());
            break;
        }
        seen.emplace(t, ds.size());
        int chosen = -1;
        for (int d : spec.digits) {
            if (Rat(d) + max_a >= t * p) {
                chosen = d;
                break;
            }
        }
        // chosen exists: t <= max_a guarantees the largest digit qualifies.
        ds.push_back(chosen);
        t = t * p - chosen;
        if (t <= min_a) {
            out.preperiod = ds;
            out.period = {min_digit};
            break;
        }
    }
    if (out.period.empty()) throw Error("successor_frac: step cap exceeded");

    // Exact value: preperiod part plus the periodic tail as a geometric sum.
    Rat pre(0), scale(1);
    for (int d : out.preperiod) {
        scale /= p;
        pre += d * scale;
    }
    Nat per_val = 0;
    for (int d : out.period) per_val = per_val * p + d;
    Nat per_den = pow_nat(p, out.period.size()) - 1;
    out.value = pre + scale * make_rat(per_val, per_den);
    return out;
}

bool frac_interval_meets(const DigitSetSpec& spec, const Rat& lo, const Rat& hi) {
    const Rat min_a = spec.frac_min();
    const Rat max_a = spec.frac_max();
    if (hi <= min_a || lo > max_a) return false;
    if (lo <= min_a) return true;  // min_a itself lies in [lo, hi)
    if (hi - lo >= 1) return true; // interval spans the whole digit range; max_a is inside
    const int p = spec.base;
    for (int d : spec.digits) {
        if (frac_interval_meets(spec, lo * p - d, hi * p - d)) return true;
    }
    return false;
}

}  // namespace rdl
