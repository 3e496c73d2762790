#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ordwalk {

// Ordinals below epsilon_0 in Cantor normal form:
//   a = w^e0 * c0 + w^e1 * c1 + ... with e0 > e1 > ... and all ci >= 1.
// The empty term list is 0. The representation is unique; every
// constructor and operation returns normalized values.
class Ordinal {
public:
    using Term = std::pair<Ordinal, std::uint64_t>; // (exponent, coefficient)

    Ordinal() = default;

    static Ordinal nat(std::uint64_t n);
    static Ordinal omega();
    // w^e * c, normalized (c == 0 gives 0).
    static Ordinal omega_pow(const Ordinal& e, std::uint64_t c = 1);

    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const;
    std::optional<std::uint64_t> as_nat() const;

    enum class Kind { zero, successor, limit };
    Kind kind() const;
    // Predecessor of a successor ordinal; rejects zero and limits.
    Ordinal pred() const;

    // k-th element (0-based) of the canonical fundamental sequence of a
    // limit ordinal; strictly increasing in k with supremum this.
    Ordinal fundamental(std::uint64_t k) const;

    friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
    friend bool operator==(const Ordinal& a, const Ordinal& b);

    friend Ordinal operator+(const Ordinal& a, const Ordinal& b);

    // Literal grammar:
    //   ord  := term ("+" term)*
    //   term := "w" "^" atom ("*" nat)? | "w" ("*" nat)? | nat
    //   atom := nat | "(" ord ")"
    // Input is normalized via ordinal addition; nullopt on syntax error.
    static std::optional<Ordinal> parse(std::string_view s);
    std::string str() const;

private:
    std::vector<Term> terms_;
};

int cmp(const Ordinal& a, const Ordinal& b);

using OrdTuple = std::vector<Ordinal>;

bool is_nondecreasing(const OrdTuple& t);
bool is_strictly_increasing(const OrdTuple& t);
// Tuple with the i-th coordinate (0-based) removed.
OrdTuple delete_coord(const OrdTuple& t, std::size_t i);

std::string tuple_str(const OrdTuple& t);

} // namespace ordwalk
