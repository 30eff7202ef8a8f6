#include "statel/rational.hpp"

#include <cctype>
#include <ostream>

#include "statel/errors.hpp"

namespace statel {

Rational::Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw Error("rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpz_class n, mpz_class d) {
    if (sgn(d) == 0) throw Error("rational: zero denominator");
    v_ = mpq_class(std::move(n)) / mpq_class(std::move(d));
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { return Error("malformed rational: '" + std::string(text) + "'"); };
    std::string s(text);
    if (s.empty()) throw bad();

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string p = s.substr(0, slash);
        std::string q = s.substr(slash + 1);
        mpz_class num, den;
        if (p.empty() || q.empty() || num.set_str(p, 10) != 0 || den.set_str(q, 10) != 0)
            throw bad();
        if (sgn(den) == 0) throw bad();
        return Rational(std::move(num), std::move(den));
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string ipart = s.substr(0, dot);
        std::string fpart = s.substr(dot + 1);
        if (fpart.empty()) throw bad();
        for (char c : fpart)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
        bool neg = !ipart.empty() && ipart[0] == '-';
        if (neg) ipart = ipart.substr(1);
        if (ipart.empty()) ipart = "0";
        mpz_class whole;
        if (whole.set_str(ipart, 10) != 0) throw bad();
        mpz_class frac, scale;
        if (frac.set_str(fpart, 10) != 0) throw bad();
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fpart.size());
        mpz_class num = whole * scale + frac;
        if (neg) num = -num;
        return Rational(std::move(num), std::move(scale));
    }

    mpz_class n;
    if (n.set_str(s, 10) != 0) throw bad();
    return Rational(std::move(n), mpz_class(1));
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace statel
