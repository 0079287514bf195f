#pragma once

#include "rosekit/chain.hpp"
#include "rosekit/exactla.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rosekit::grouppres {

/// Letter of a free-group word: generator index with exponent +1 or -1.
struct Letter {
    int gen = 0;
    int exp = 1;

    bool operator==(const Letter&) const = default;
};

/// Freely reduced word in a free group.
class Word {
public:
    Word() = default;

    static Word from_letters(std::vector<Letter> letters);
    static Word generator(int j);
    static Word power(int j, long long e);
    static Word commutator(int i, int j);  // [x, y] = x y x^-1 y^-1

    /// Parse a space-separated word like "a b A B" (capitalized = inverse).
    static Word parse(const std::string& text, int generator_count);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    int size() const { return static_cast<int>(letters_.size()); }
    int max_generator() const;

    Word inverse() const;
    Word operator*(const Word& rhs) const;
    bool operator==(const Word&) const = default;

    long long exponent_sum(int j) const;
    std::string str(int generator_count) const;

private:
    std::vector<Letter> letters_;
};

std::string generator_name(int index, int generator_count);

struct FinitePresentation {
    int generators = 0;
    std::vector<Word> relators;

    int relator_count() const { return static_cast<int>(relators.size()); }
    int deficiency() const { return generators - relator_count(); }
    void validate() const;

    bool operator==(const FinitePresentation&) const = default;
};

/// Finite abelian group Z_{d_1} x ... x Z_{d_k}; elements are coordinate tuples
/// reduced mod d_i, enumerated in lexicographic order (first coordinate most
/// significant), so index 0 is the identity.
struct AbelianTarget {
    std::vector<std::int64_t> factors;

    using Element = std::vector<std::int64_t>;

    explicit AbelianTarget(std::vector<std::int64_t> f = {});

    int coords() const { return static_cast<int>(factors.size()); }
    std::int64_t order() const;
    bool trivial() const { return order() == 1; }

    Element zero() const { return Element(factors.size(), 0); }
    Element reduce(Element e) const;
    Element add(const Element& a, const Element& b) const;
    Element negate(const Element& a) const;
    Element scale(const Element& a, std::int64_t n) const;

    std::int64_t index_of(const Element& e) const;
    Element element_at(std::int64_t index) const;

    bool operator==(const AbelianTarget&) const = default;
    std::string str() const;
};

/// Homomorphism from a presentation's free group to a finite abelian target,
/// given by generator images.
struct Epimorphism {
    AbelianTarget target;
    std::vector<AbelianTarget::Element> images;

    AbelianTarget::Element image_of(const Word& w) const;
    bool kills(const Word& w) const;
};

/// True when every relator of p maps to the identity (the map descends to the
/// presented group).
bool is_well_defined(const Epimorphism& phi, const FinitePresentation& p);

/// True when the generator images generate the whole target.
bool is_surjective(const Epimorphism& phi);

/// Throws std::invalid_argument with a named diagnostic unless phi is a
/// well-defined surjection from the group presented by p onto its target.
void validate_epimorphism(const Epimorphism& phi, const FinitePresentation& p);

/// Element of Z[G] for a finite abelian G: finitely many integer coefficients
/// indexed by group elements.
class GroupRingElement {
public:
    explicit GroupRingElement(AbelianTarget g);

    const AbelianTarget& group() const { return group_; }
    const std::map<AbelianTarget::Element, long long>& terms() const { return terms_; }

    void add_term(const AbelianTarget::Element& e, long long c);
    long long coefficient(const AbelianTarget::Element& e) const;
    long long augmentation() const;
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const GroupRingElement&) const = default;

private:
    AbelianTarget group_;
    std::map<AbelianTarget::Element, long long> terms_;
};

/// Presentation 2-complex: one vertex, a 1-cell per generator, a 2-cell per
/// relator; boundary(2) carries exponent sums.
chain::ChainComplex presentation_complex(const FinitePresentation& p);

/// Left Fox derivative of w with respect to generator j, pushed through phi.
GroupRingElement fox_derivative(const Word& w, int j, const Epimorphism& phi);

/// Presentation of ker(phi) via Reidemeister-Schreier rewriting along a
/// breadth-first Schreier spanning tree, with tree generators collapsed.
FinitePresentation reidemeister_schreier(const FinitePresentation& p, const Epimorphism& phi);

// ---- catalog of named presentations ----

FinitePresentation catalog_free(int n);
FinitePresentation catalog_cyclic(std::int64_t m);  // <a | a^m>, complex of the order-m pseudo-projective plane
FinitePresentation catalog_torus();
FinitePresentation catalog_klein_bottle();
FinitePresentation catalog_abelian(int r, const std::vector<std::int64_t>& d);
FinitePresentation catalog_quaternionic(std::int64_t n, std::int64_t k, std::int64_t l);  // Q(8n, k, l)
FinitePresentation catalog_swan(int k);

/// Dispatch by name: free(n), cyclic(m), torus, klein, abelian(r, d...),
/// quaternionic(n, k, l), swan(k).
FinitePresentation catalog(const std::string& name, const std::vector<std::int64_t>& params);

}  // namespace rosekit::grouppres
