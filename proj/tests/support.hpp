// Shared helpers for the test suites: a tiny non-negative bignum (used as an
// independent oracle for p-adic valuations of a^k - 1 beyond the uint64
// range), and a popen-based runner for command-line tests.

#ifndef TRISPARSE_TESTS_SUPPORT_HPP
#define TRISPARSE_TESTS_SUPPORT_HPP

#include <sys/wait.h>

#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "trisparse/field.hpp"
#include "trisparse/poly.hpp"

namespace testsupport {

/// Unsigned bignum, base 2^32 limbs, little endian.  Just enough arithmetic
/// to compute v_p(a^k - 1) by repeated division: independent of the library
/// under test on purpose.
struct BigNat {
    std::vector<std::uint32_t> limbs;

    explicit BigNat(std::uint64_t v) {
        limbs.push_back(static_cast<std::uint32_t>(v));
        limbs.push_back(static_cast<std::uint32_t>(v >> 32));
        trim();
    }

    void trim() {
        while (!limbs.empty() && limbs.back() == 0) limbs.pop_back();
    }

    bool is_zero() const { return limbs.empty(); }

    void mul_small(std::uint32_t m) {
        std::uint64_t carry = 0;
        for (auto& limb : limbs) {
            const std::uint64_t t = std::uint64_t{limb} * m + carry;
            limb = static_cast<std::uint32_t>(t);
            carry = t >> 32;
        }
        if (carry) limbs.push_back(static_cast<std::uint32_t>(carry));
        trim();
    }

    /// requires a nonzero value
    void sub_one() {
        for (auto& limb : limbs) {
            if (limb != 0) {
                --limb;
                break;
            }
            limb = 0xffffffffu;  // borrow
        }
        trim();
    }

    /// divides in place, returning the remainder
    std::uint32_t divmod_small(std::uint32_t d) {
        std::uint64_t rem = 0;
        for (std::size_t i = limbs.size(); i-- > 0;) {
            const std::uint64_t cur = (rem << 32) | limbs[i];
            limbs[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return static_cast<std::uint32_t>(rem);
    }
};

/// v_p(a^k - 1) computed with schoolbook bignum arithmetic.
inline std::uint32_t vp_pow_minus_one(std::uint64_t p, std::uint64_t a, std::uint64_t k) {
    BigNat big(1);
    for (std::uint64_t i = 0; i < k; ++i) big.mul_small(static_cast<std::uint32_t>(a));
    big.sub_one();
    std::uint32_t count = 0;
    while (!big.is_zero()) {
        BigNat probe = big;
        if (probe.divmod_small(static_cast<std::uint32_t>(p)) != 0) break;
        big = std::move(probe);
        ++count;
    }
    return count;
}

/// Runs a shell command, returning (exit status, captured stdout).
inline std::pair<int, std::string> run_command(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string output;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    const int status = pclose(pipe);
    if (status < 0) return {-1, output};
    return {WEXITSTATUS(status), output};
}

inline trisparse::Polynomial poly(trisparse::FieldPtr field,
                                  std::initializer_list<std::int64_t> coeffs,
                                  trisparse::Level level = trisparse::Level::base) {
    return trisparse::Polynomial::from_ints(std::move(field), coeffs, level);
}

}  // namespace testsupport

#endif
