#include "tropmono/rational.hpp"

#include <ostream>

namespace tropmono {

ExtValue trop_mul(const ExtValue& a, const ExtValue& b) {
    if (a.is_pos_inf() || b.is_pos_inf())
        throw Error("InfiniteOperand", "tropical multiplication is undefined for +inf");
    if (a.is_neg_inf() || b.is_neg_inf()) return ExtValue::neg_inf();
    return ExtValue(a.value() + b.value());
}

ExtValue negate(const ExtValue& a) {
    switch (a.tag()) {
        case ExtValue::Tag::NegInf: return ExtValue::pos_inf();
        case ExtValue::Tag::PosInf: return ExtValue::neg_inf();
        default: return ExtValue(Rational(-a.value()));
    }
}

ExtValue parse_ext_value(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s == "-inf" || s == "-oo") return ExtValue::neg_inf();
    if (s == "+inf" || s == "inf" || s == "+oo" || s == "oo") return ExtValue::pos_inf();
    try {
        Rational q(s);
        q.canonicalize();
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        return ExtValue(q);
    } catch (const std::exception&) {
        throw Error("ParseError", "cannot parse extended rational from '" + text + "'");
    }
}

std::string ExtValue::str() const {
    switch (tag_) {
        case Tag::NegInf: return "-inf";
        case Tag::PosInf: return "+inf";
        default: return value_.get_str();
    }
}

std::ostream& operator<<(std::ostream& os, const ExtValue& v) { return os << v.str(); }

}  // namespace tropmono
