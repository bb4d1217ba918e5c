#pragma once

// Sparse graded-commutative ring arithmetic. A RingPresentation fixes the
// generators, the kind of algebra (free polynomial, exterior, or quotient by
// square-eliminating relations) and the coefficient system; an Element is a
// finite sum of coefficient * monomial that is always kept in normal form.

#include "transgress/coeff.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace transgress {

enum class Parity { Even, Odd };
enum class RingKind { FreePolynomial, Exterior, Quotient };
enum class TorsionPolicy { None, Formal2Torsion };

std::string_view kind_name(RingKind kind);

/// Subscript convention: the subscript is the cohomological degree.
/// The degree-0 generator "ch0" counts components of a "x Z" space.
struct Generator {
    std::string symbol;
    int degree = 0;
    Parity parity = Parity::Even;

    std::string name() const;
    bool is_component_class() const { return degree == 0; }
};

struct Factor {
    int gen = 0;  // index into RingPresentation::generators()
    int exp = 0;

    friend bool operator==(const Factor&, const Factor&) = default;
};

class Monomial {
public:
    Monomial() = default;
    /// `factors` must be sorted by generator index with positive exponents.
    Monomial(std::vector<Factor> factors, int degree) : factors_(std::move(factors)), degree_(degree) {}

    const std::vector<Factor>& factors() const { return factors_; }
    int degree() const { return degree_; }
    int length() const;
    bool is_unit() const { return factors_.empty(); }
    int exponent(int gen) const;

    friend bool operator==(const Monomial& a, const Monomial& b)
    {
        return a.degree_ == b.degree_ && a.factors_ == b.factors_;
    }
    /// Graded-lexicographic: lower degree first; within a degree the monomial
    /// with the larger exponent on the earliest generator comes first.
    friend bool operator<(const Monomial& a, const Monomial& b);

private:
    std::vector<Factor> factors_;
    int degree_ = 0;
};

using Terms = std::map<Monomial, Rational>;

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

enum class RewriteOrder { HighestSquareFirst, LowestSquareFirst };

class RingPresentation : public std::enable_shared_from_this<RingPresentation> {
public:
    struct RelationTerm {
        Rational coeff;
        std::vector<std::pair<std::string, int>> factors;
    };

    struct Spec {
        std::string id;
        std::string description;
        std::vector<Generator> generators;
        RingKind kind = RingKind::FreePolynomial;
        CoeffRing coeff = CoeffRing::Z;
        TorsionPolicy torsion = TorsionPolicy::None;
        std::vector<std::vector<RelationTerm>> relations;
        int max_degree = 48;
        /// Koszul signs for odd generators. Off over Z/2 where they vanish;
        /// inherited by the rational shadow of a mod-2 ring.
        std::optional<bool> graded_signs;
    };

    static RingPtr create(Spec spec);

    const std::string& id() const { return id_; }
    const std::string& description() const { return description_; }
    RingKind kind() const { return kind_; }
    CoeffRing coeff() const { return coeff_; }
    TorsionPolicy torsion_policy() const { return torsion_; }
    int max_degree() const { return max_degree_; }
    bool graded_signs() const { return graded_signs_; }

    const std::vector<Generator>& generators() const { return generators_; }
    const Generator& generator(int index) const { return generators_.at(static_cast<std::size_t>(index)); }
    std::optional<int> find(std::string_view name) const;
    int index_of(std::string_view name) const;  // throws UnknownGenerator

    bool same_as(const RingPresentation& other) const;

    Monomial make_monomial(std::vector<Factor> factors) const;
    Monomial generator_monomial(int gen, int exp = 1) const;
    std::string monomial_name(const Monomial& m) const;

    /// Product of two monomials written in canonical order: the Koszul sign and
    /// the merged monomial, or nullopt when the product vanishes (exterior or
    /// odd square).
    std::optional<std::pair<int, Monomial>> multiply(const Monomial& a, const Monomial& b) const;

    /// Whether a monomial survives the kind's structural constraints.
    bool admissible(const Monomial& m) const;

    /// Normal form of a monomial; only Quotient rings rewrite.
    Terms normal_form(const Monomial& m, RewriteOrder order = RewriteOrder::HighestSquareFirst) const;

    /// Relation generators of a Quotient ring as raw terms (not normalized).
    const std::vector<Terms>& relations() const { return relations_; }
    bool has_square_rule(int gen) const;

    /// Normal-form basis in degree `degree` of the identity component, i.e.
    /// degree-0 component classes are left out.
    std::vector<Monomial> basis(int degree) const;

    /// Normalizes every monomial up to `degree` under both rewrite orders and
    /// checks they agree, and that every relation normalizes to zero.
    void check_confluence(int degree) const;

    /// Same generators, kind and relations, coefficients in Q. Used to
    /// evaluate expressions before coefficients are reduced.
    RingPtr rational_shadow() const;

private:
    explicit RingPresentation(Spec spec);
    void install_relations();
    Terms rewrite(const Monomial& m, RewriteOrder order, int depth) const;

    Spec spec_;
    std::string id_;
    std::string description_;
    std::vector<Generator> generators_;
    RingKind kind_;
    CoeffRing coeff_;
    TorsionPolicy torsion_;
    int max_degree_;
    bool graded_signs_;
    std::unordered_map<std::string, int> index_;
    std::vector<Terms> relations_;
    std::map<int, Terms> square_rules_;  // generator -> replacement for its square

    mutable std::mutex cache_mutex_;
    mutable std::map<Monomial, Terms> cache_[2];
    mutable std::once_flag shadow_once_;
    mutable RingPtr shadow_;
};

class Element {
public:
    explicit Element(RingPtr ring);

    /// Normalizes: applies relations, drops inadmissible monomials, reduces
    /// coefficients into the ring's coefficient system, drops zeros.
    static Element from_terms(RingPtr ring, const Terms& raw, bool torsion = false);
    static Element constant(RingPtr ring, const Rational& value);
    static Element generator(RingPtr ring, std::string_view name);
    static Element monomial(RingPtr ring, const Monomial& m, const Rational& coeff = 1);
    /// A pure "+ Tors" summand with zero free part.
    static Element torsion_class(RingPtr ring);

    const RingPresentation& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool torsion() const { return torsion_; }

    bool is_zero() const { return terms_.empty() && !torsion_; }
    bool free_part_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    /// Degree of a nonzero homogeneous element.
    std::optional<int> degree() const;
    Rational coefficient(const Monomial& m) const;

    Element with_torsion(bool torsion) const;
    Element free_part() const { return with_torsion(false); }

    friend bool operator==(const Element& a, const Element& b);

private:
    RingPtr ring_;
    Terms terms_;
    bool torsion_ = false;
};

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element negate(const Element& a);
/// Over Q/Z only integer scalars are allowed. An even numerator clears the torsion mark.
Element scale(const Rational& q, const Element& a);
Element mul(const Element& a, const Element& b);
Element power(const Element& a, int n);
Element normalize(const Element& e);
Element degree_part(const Element& e, int degree);
/// True iff every monomial has total exponent at least 2.
bool is_decomposable(const Element& e);

/// Reinterprets e in a ring over the same generator names with a different
/// coefficient system. The torsion mark is dropped when the target is Q.
Element change_coefficients(const Element& e, const RingPtr& target);

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return sub(a, b); }
inline Element operator-(const Element& a) { return negate(a); }
inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }
inline Element operator*(const Rational& q, const Element& a) { return scale(q, a); }

/// Canonical text form, e.g. "c_2^2 - 2*c_4".
std::string to_text(const Element& e);

}  // namespace transgress
