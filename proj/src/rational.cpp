#include "lsf/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lsf {

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational");

    std::size_t slash = 0;
    int slashes = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '/') {
            slash = i;
            ++slashes;
        } else if (!(std::isdigit(static_cast<unsigned char>(ch)) || (i == 0 && (ch == '-' || ch == '+')))) {
            throw std::invalid_argument("malformed rational: " + std::string(text));
        }
    }
    if (slashes > 1) throw std::invalid_argument("malformed rational: " + std::string(text));

    std::string num(slashes ? text.substr(0, slash) : text);
    std::string den(slashes ? text.substr(slash + 1) : std::string_view("1"));
    if (!num.empty() && num.front() == '+') num.erase(0, 1);
    if (num.empty() || num == "-" || den.empty()) throw std::invalid_argument("malformed rational: " + std::string(text));

    Integer p(num, 10);
    Integer q(den, 10);
    if (q == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace lsf
