#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "tropmono/errors.hpp"

namespace tropmono {

using Rational = mpq_class;

/// A value of the extended line {-inf} u Q u {+inf}.
///
/// +inf takes part in comparisons only.  Tropical multiplication (classical
/// addition) rejects +inf operands; -inf is absorbing.
class ExtValue {
public:
    enum class Tag : std::uint8_t { NegInf, Finite, PosInf };

    ExtValue() : tag_(Tag::NegInf) {}
    ExtValue(long v) : tag_(Tag::Finite), value_(v) {}
    ExtValue(Rational v) : tag_(Tag::Finite), value_(std::move(v)) {
        value_.canonicalize();
    }

    static ExtValue neg_inf() { return ExtValue(Tag::NegInf); }
    static ExtValue pos_inf() { return ExtValue(Tag::PosInf); }

    Tag tag() const { return tag_; }
    bool is_neg_inf() const { return tag_ == Tag::NegInf; }
    bool is_finite() const { return tag_ == Tag::Finite; }
    bool is_pos_inf() const { return tag_ == Tag::PosInf; }

    // Precondition: is_finite().
    const Rational& value() const { return value_; }

    bool is_integer() const { return is_finite() && value_.get_den() == 1; }

    friend bool operator==(const ExtValue& a, const ExtValue& b) {
        if (a.tag_ != b.tag_) return false;
        return a.tag_ != Tag::Finite || a.value_ == b.value_;
    }
    friend bool operator!=(const ExtValue& a, const ExtValue& b) { return !(a == b); }
    friend bool operator<(const ExtValue& a, const ExtValue& b) {
        if (a.tag_ != b.tag_)
            return static_cast<int>(a.tag_) < static_cast<int>(b.tag_);
        return a.tag_ == Tag::Finite && a.value_ < b.value_;
    }
    friend bool operator>(const ExtValue& a, const ExtValue& b) { return b < a; }
    friend bool operator<=(const ExtValue& a, const ExtValue& b) { return !(b < a); }
    friend bool operator>=(const ExtValue& a, const ExtValue& b) { return !(a < b); }

    std::string str() const;

private:
    explicit ExtValue(Tag t) : tag_(t) {}

    Tag tag_;
    Rational value_;
};

// Tropical multiplication, i.e. classical addition.  -inf absorbs; +inf is an error.
ExtValue trop_mul(const ExtValue& a, const ExtValue& b);

// Classical negation extended by -(+inf) = -inf and vice versa.
ExtValue negate(const ExtValue& a);

// Parses "p/q", integer strings, "-inf"/"+inf" (also "inf").
ExtValue parse_ext_value(const std::string& text);

std::ostream& operator<<(std::ostream& os, const ExtValue& v);

}  // namespace tropmono
