#include "transgress/coeff.hpp"

#include "transgress/error.hpp"

#include <cctype>

namespace transgress {

const char* errc_name(Errc code)
{
    switch (code) {
    case Errc::PresentationMismatch: return "PresentationMismatch";
    case Errc::NonRingCoefficients: return "NonRingCoefficients";
    case Errc::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case Errc::NonTerminatingRewrite: return "NonTerminatingRewrite";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::TorsionNotAllowed: return "TorsionNotAllowed";
    case Errc::AmbiguousTorsion: return "AmbiguousTorsion";
    case Errc::OddDegree: return "OddDegree";
    case Errc::InsufficientRoots: return "InsufficientRoots";
    case Errc::UnknownEntry: return "UnknownEntry";
    case Errc::NotAComponentSpace: return "NotAComponentSpace";
    case Errc::SourceMismatch: return "SourceMismatch";
    case Errc::UnregisteredMonomial: return "UnregisteredMonomial";
    case Errc::NoLoopRule: return "NoLoopRule";
    case Errc::DegreeExhausted: return "DegreeExhausted";
    case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownGenerator: return "UnknownGenerator";
    case Errc::UnknownMap: return "UnknownMap";
    case Errc::InvariantViolation: return "InvariantViolation";
    }
    return "Error";
}

std::string_view coeff_name(CoeffRing ring)
{
    switch (ring) {
    case CoeffRing::Z: return "Z";
    case CoeffRing::Q: return "Q";
    case CoeffRing::F2: return "F2";
    case CoeffRing::ZHalf: return "Zhalf";
    case CoeffRing::QmodZ: return "QmodZ";
    }
    return "?";
}

std::optional<CoeffRing> parse_coeff_ring(std::string_view text)
{
    if (text == "Z") return CoeffRing::Z;
    if (text == "Q") return CoeffRing::Q;
    if (text == "F2") return CoeffRing::F2;
    if (text == "Zhalf") return CoeffRing::ZHalf;
    if (text == "QmodZ") return CoeffRing::QmodZ;
    return std::nullopt;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_power_of_two(const Integer& n)
{
    if (n <= 0)
        return false;
    return mpz_popcount(n.get_mpz_t()) == 1;
}

Integer floor_of(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

F2 F2::from_integer(const Integer& n) { return F2(mpz_odd_p(n.get_mpz_t()) != 0); }

ZHalf::ZHalf(const Rational& value) : value_(value)
{
    value_.canonicalize();
    if (!is_power_of_two(value_.get_den()))
        throw Error(Errc::NonIntegralCoefficient, format_rational(value_) + " is not in Z[1/2]");
}

QmodZ reduce_mod_Z(const Rational& q)
{
    QmodZ r;
    r.rep_ = q - Rational(floor_of(q));
    r.rep_.canonicalize();
    return r;
}

QmodZ operator+(const QmodZ& a, const QmodZ& b) { return reduce_mod_Z(a.rep_ + b.rep_); }
QmodZ operator-(const QmodZ& a, const QmodZ& b) { return reduce_mod_Z(a.rep_ - b.rep_); }
QmodZ operator-(const QmodZ& a) { return reduce_mod_Z(-a.rep_); }
QmodZ operator*(const Integer& n, const QmodZ& a) { return reduce_mod_Z(Rational(n) * a.rep_); }

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

QmodZ half_lift(F2 b) { return reduce_mod_Z(b.bit() ? Rational(1, 2) : Rational(0)); }

Rational normalize_coefficient(const Rational& q, CoeffRing ring)
{
    switch (ring) {
    case CoeffRing::Q:
        return q;
    case CoeffRing::Z:
        if (!is_integer(q))
            throw Error(Errc::NonIntegralCoefficient, format_rational(q) + " is not an integer");
        return q;
    case CoeffRing::F2:
        if (!is_integer(q))
            throw Error(Errc::NonIntegralCoefficient, format_rational(q) + " has no reduction mod 2");
        return F2::from_integer(q.get_num()).bit() ? Rational(1) : Rational(0);
    case CoeffRing::ZHalf:
        return ZHalf(q).value();
    case CoeffRing::QmodZ:
        return reduce_mod_Z(q).representative();
    }
    return q;
}

std::string format_rational(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw SyntaxError(0, "malformed rational '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d == 0)
        throw SyntaxError(slash == std::string_view::npos ? 0 : slash + 1, "zero denominator");
    Rational q{Integer{std::string(num)}, d};
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_string(F2 b) { return b.bit() ? "1" : "0"; }

std::string to_string(const QmodZ& x) { return format_rational(x.representative()) + " mod Z"; }

F2 parse_f2(std::string_view text)
{
    std::string_view s = trim(text);
    if (s == "0")
        return F2(false);
    if (s == "1")
        return F2(true);
    throw SyntaxError(0, "expected 0 or 1, got '" + std::string(text) + "'");
}

QmodZ parse_qmodz(std::string_view text)
{
    std::string_view s = trim(text);
    constexpr std::string_view suffix = "mod Z";
    if (s.size() < suffix.size() || s.substr(s.size() - suffix.size()) != suffix)
        throw SyntaxError(s.size(), "expected trailing 'mod Z'");
    s.remove_suffix(suffix.size());
    return reduce_mod_Z(parse_rational(s));
}

}  // namespace transgress
