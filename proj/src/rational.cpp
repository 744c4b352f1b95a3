#include "imf/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace imf {

Rat frac(const Int& p, const Int& q) {
    if (q == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

std::optional<Rat> parse_rational(std::string_view token) {
    if (token.empty()) return std::nullopt;
    auto valid_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    std::string num, den = "1";
    if (auto slash = token.find('/'); slash != std::string_view::npos) {
        num = std::string(token.substr(0, slash));
        den = std::string(token.substr(slash + 1));
    } else {
        num = std::string(token);
    }
    if (!valid_int(num) || !valid_int(den)) return std::nullopt;
    if (num[0] == '+') num.erase(0, 1);  // mpz rejects an explicit plus sign
    if (den[0] == '+') den.erase(0, 1);
    Int p(num), q(den);
    if (q == 0) return std::nullopt;
    return frac(p, q);
}

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int floor_sqrt(const Int& r) {
    if (r < 0) throw std::domain_error("floor_sqrt of negative value");
    Int s;
    mpz_sqrt(s.get_mpz_t(), r.get_mpz_t());
    return s;
}

Int floor_center_plus_sqrt(const Rat& c, const Rat& r) {
    if (r < 0) throw std::domain_error("negative radicand");
    // floor(c + sqrt(r)): sqrt(p/q) = sqrt(p*q)/q, and floor composes with
    // the integer division, so start from the isqrt estimate and adjust.
    Rat root_est(floor_sqrt(r.get_num() * r.get_den()), r.get_den());
    root_est.canonicalize();
    Int k;
    mpz_fdiv_q((k.get_mpz_t()), Rat(c + root_est).get_num().get_mpz_t(),
               Rat(c + root_est).get_den().get_mpz_t());
    auto ok = [&](const Int& v) {
        Rat d = Rat(v) - c;
        return d <= 0 || Rat(d * d) <= r;
    };
    while (!ok(k)) --k;
    while (ok(k + 1)) ++k;
    return k;
}

Int ceil_center_minus_sqrt(const Rat& c, const Rat& r) {
    return -floor_center_plus_sqrt(-c, r);
}

}  // namespace imf
