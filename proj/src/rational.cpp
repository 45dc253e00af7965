#include "rational.hpp"

namespace l3kit {

static bool valid_int(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

Scalar Scalar::parse(const std::string& s) {
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    if (!valid_int(num)) throw parse_error("bad scalar '" + s + "'");
    mpz_class p(num);
    mpz_class q(1);
    if (slash != std::string::npos) {
        const std::string den = s.substr(slash + 1);
        if (!valid_int(den)) throw parse_error("bad scalar '" + s + "'");
        q = mpz_class(den);
        if (q == 0) throw parse_error("zero denominator in '" + s + "'");
    }
    mpq_class v(p, q);
    v.canonicalize();
    return Scalar(std::move(v));
}

std::string Scalar::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace l3kit
