#include "qfrob/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace qfrob {

Rat::Rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
    mpq_class v;
    if (text.empty() || v.set_str(text, 10) != 0)
        throw std::invalid_argument("Rat: cannot parse '" + text + "'");
    if (v.get_den() == 0) throw std::invalid_argument("Rat: zero denominator");
    v.canonicalize();
    return Rat(std::move(v));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace qfrob
