#include "rosekit/grouppres.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rosekit::grouppres {

using exactla::IntegerMatrix;

Word Word::from_letters(std::vector<Letter> letters) {
    Word w;
    for (const Letter& l : letters) {
        if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("Word: letter exponent must be +-1");
        if (l.gen < 0) throw std::invalid_argument("Word: negative generator index");
        if (!w.letters_.empty() && w.letters_.back().gen == l.gen &&
            w.letters_.back().exp == -l.exp) {
            w.letters_.pop_back();
        } else {
            w.letters_.push_back(l);
        }
    }
    return w;
}

Word Word::generator(int j) { return from_letters({{j, 1}}); }

Word Word::power(int j, long long e) {
    std::vector<Letter> ls;
    const int sign = e < 0 ? -1 : 1;
    for (long long i = 0; i < (e < 0 ? -e : e); ++i) ls.push_back({j, sign});
    return from_letters(std::move(ls));
}

Word Word::commutator(int i, int j) {
    return from_letters({{i, 1}, {j, 1}, {i, -1}, {j, -1}});
}

int Word::max_generator() const {
    int m = -1;
    for (const Letter& l : letters_) m = std::max(m, l.gen);
    return m;
}

Word Word::inverse() const {
    std::vector<Letter> ls;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) ls.push_back({it->gen, -it->exp});
    return from_letters(std::move(ls));
}

Word Word::operator*(const Word& rhs) const {
    std::vector<Letter> ls = letters_;
    ls.insert(ls.end(), rhs.letters_.begin(), rhs.letters_.end());
    return from_letters(std::move(ls));
}

long long Word::exponent_sum(int j) const {
    long long s = 0;
    for (const Letter& l : letters_)
        if (l.gen == j) s += l.exp;
    return s;
}

std::string generator_name(int index, int generator_count) {
    if (index < 0 || index >= generator_count)
        throw std::out_of_range("generator_name: index out of range");
    if (generator_count <= 26) return std::string(1, static_cast<char>('a' + index));
    return "g" + std::to_string(index + 1);
}

namespace {

int lookup_generator(const std::string& lower, int generator_count) {
    if (generator_count <= 26) {
        if (lower.size() == 1 && lower[0] >= 'a' && lower[0] < 'a' + generator_count)
            return lower[0] - 'a';
    } else if (lower.size() >= 2 && lower[0] == 'g') {
        int idx = std::stoi(lower.substr(1)) - 1;
        if (idx >= 0 && idx < generator_count) return idx;
    }
    throw std::invalid_argument("Word: unknown generator token '" + lower + "'");
}

}  // namespace

Word Word::parse(const std::string& text, int generator_count) {
    std::istringstream in(text);
    std::string token;
    std::vector<Letter> ls;
    while (in >> token) {
        const bool inv = std::isupper(static_cast<unsigned char>(token[0])) != 0;
        std::string lower = token;
        lower[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(lower[0])));
        ls.push_back({lookup_generator(lower, generator_count), inv ? -1 : 1});
    }
    return from_letters(std::move(ls));
}

std::string Word::str(int generator_count) const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        std::string name = generator_name(letters_[i].gen, generator_count);
        if (letters_[i].exp < 0) name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
        os << (i == 0 ? "" : " ") << name;
    }
    return os.str();
}

void FinitePresentation::validate() const {
    if (generators < 0) throw std::invalid_argument("FinitePresentation: negative generator count");
    for (const Word& r : relators)
        if (r.max_generator() >= generators)
            throw std::invalid_argument("FinitePresentation: relator uses generator out of range");
}

AbelianTarget::AbelianTarget(std::vector<std::int64_t> f) : factors(std::move(f)) {
    for (std::int64_t d : factors)
        if (d < 1) throw std::invalid_argument("AbelianTarget: factors must be >= 1");
    order();  // reject overflowing orders up front
}

std::int64_t AbelianTarget::order() const {
    std::int64_t n = 1;
    for (std::int64_t d : factors) {
        if (n > (1LL << 40) / d) throw std::invalid_argument("AbelianTarget: group order too large");
        n *= d;
    }
    return n;
}

AbelianTarget::Element AbelianTarget::reduce(Element e) const {
    if (e.size() != factors.size()) throw std::invalid_argument("AbelianTarget: wrong coordinate count");
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] %= factors[i];
        if (e[i] < 0) e[i] += factors[i];
    }
    return e;
}

AbelianTarget::Element AbelianTarget::add(const Element& a, const Element& b) const {
    Element e(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) e[i] = a[i] + b[i];
    return reduce(std::move(e));
}

AbelianTarget::Element AbelianTarget::negate(const Element& a) const {
    Element e(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) e[i] = -a[i];
    return reduce(std::move(e));
}

AbelianTarget::Element AbelianTarget::scale(const Element& a, std::int64_t n) const {
    Element e(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) e[i] = (a[i] % factors[i]) * (n % factors[i]);
    return reduce(std::move(e));
}

std::int64_t AbelianTarget::index_of(const Element& e) const {
    Element r = reduce(e);
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i] + r[i];
    return idx;
}

AbelianTarget::Element AbelianTarget::element_at(std::int64_t index) const {
    Element e(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
        e[i] = index % factors[i];
        index /= factors[i];
    }
    return e;
}

std::string AbelianTarget::str() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i == 0 ? "Z" : " x Z") << factors[i];
    return os.str();
}

AbelianTarget::Element Epimorphism::image_of(const Word& w) const {
    AbelianTarget::Element e = target.zero();
    for (const Letter& l : w.letters()) {
        if (l.gen >= static_cast<int>(images.size()))
            throw std::invalid_argument("Epimorphism: word uses generator without an image");
        e = target.add(e, l.exp > 0 ? images[l.gen] : target.negate(images[l.gen]));
    }
    return e;
}

bool Epimorphism::kills(const Word& w) const {
    return image_of(w) == target.zero();
}

bool is_well_defined(const Epimorphism& phi, const FinitePresentation& p) {
    if (static_cast<int>(phi.images.size()) != p.generators) return false;
    return std::all_of(p.relators.begin(), p.relators.end(),
                       [&](const Word& r) { return phi.kills(r); });
}

bool is_surjective(const Epimorphism& phi) {
    const int k = phi.target.coords();
    if (k == 0) return true;
    const int n = static_cast<int>(phi.images.size());
    // the images generate iff Z^k / (image columns + d_i e_i) is trivial
    IntegerMatrix rel(k, n + k);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < k; ++i) rel.at(i, j) = phi.images[j][i];
    for (int i = 0; i < k; ++i) rel.at(i, n + i) = phi.target.factors[i];
    exactla::SmithForm snf = exactla::smith_normal_form(rel);
    return static_cast<int>(snf.diag.size()) == k &&
           std::all_of(snf.diag.begin(), snf.diag.end(),
                       [](const exactla::Integer& d) { return d == 1; });
}

void validate_epimorphism(const Epimorphism& phi, const FinitePresentation& p) {
    p.validate();
    if (static_cast<int>(phi.images.size()) != p.generators)
        throw std::invalid_argument("epimorphism: expected " + std::to_string(p.generators) +
                                    " generator images, got " + std::to_string(phi.images.size()));
    for (const auto& img : phi.images)
        if (static_cast<int>(img.size()) != phi.target.coords())
            throw std::invalid_argument("epimorphism: image has wrong coordinate count for target " +
                                        phi.target.str());
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        if (!phi.kills(p.relators[i]))
            throw std::invalid_argument("epimorphism: relator " + std::to_string(i + 1) +
                                        " does not map to the identity (map is not defined on the group)");
    }
    if (!is_surjective(phi))
        throw std::invalid_argument("epimorphism: generator images do not generate " + phi.target.str());
}

GroupRingElement::GroupRingElement(AbelianTarget g) : group_(std::move(g)) {}

void GroupRingElement::add_term(const AbelianTarget::Element& e, long long c) {
    if (c == 0) return;
    AbelianTarget::Element r = group_.reduce(e);
    auto it = terms_.find(r);
    if (it == terms_.end()) {
        terms_.emplace(std::move(r), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

long long GroupRingElement::coefficient(const AbelianTarget::Element& e) const {
    auto it = terms_.find(group_.reduce(e));
    return it == terms_.end() ? 0 : it->second;
}

long long GroupRingElement::augmentation() const {
    return std::accumulate(terms_.begin(), terms_.end(), 0LL,
                           [](long long acc, const auto& kv) { return acc + kv.second; });
}

chain::ChainComplex presentation_complex(const FinitePresentation& p) {
    p.validate();
    const int n = p.generators;
    const int m = p.relator_count();
    IntegerMatrix d1(1, n);  // every 1-cell is a loop at the single vertex
    IntegerMatrix d2(n, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) d2.at(j, i) = p.relators[i].exponent_sum(j);
    return chain::ChainComplex(chain::Coefficients::integers(), {1, n, m},
                               {std::move(d1), std::move(d2)});
}

GroupRingElement fox_derivative(const Word& w, int j, const Epimorphism& phi) {
    if (j < 0 || j >= static_cast<int>(phi.images.size()))
        throw std::out_of_range("fox_derivative: generator index out of range");
    GroupRingElement out(phi.target);
    AbelianTarget::Element prefix = phi.target.zero();
    for (const Letter& l : w.letters()) {
        if (l.gen >= static_cast<int>(phi.images.size()))
            throw std::out_of_range("fox_derivative: word uses generator without an image");
        if (l.exp > 0) {
            if (l.gen == j) out.add_term(prefix, 1);
            prefix = phi.target.add(prefix, phi.images[l.gen]);
        } else {
            prefix = phi.target.add(prefix, phi.target.negate(phi.images[l.gen]));
            if (l.gen == j) out.add_term(prefix, -1);
        }
    }
    return out;
}

namespace {

struct SchreierTree {
    // BFS over edges g -> g + phi(a_j), generators tried in index order
    std::vector<std::vector<std::int64_t>> step;       // step[j][g] = index of g + phi(a_j)
    std::vector<std::vector<bool>> is_tree;            // is_tree[j][g]
    std::vector<std::vector<int>> schreier_gen;        // schreier_gen[j][g], -1 on tree edges
    int generator_count = 0;
};

SchreierTree build_schreier_tree(const Epimorphism& phi, int n) {
    const std::int64_t N = phi.target.order();
    SchreierTree t;
    t.step.assign(n, std::vector<std::int64_t>(N));
    t.is_tree.assign(n, std::vector<bool>(N, false));
    t.schreier_gen.assign(n, std::vector<int>(N, -1));

    for (int j = 0; j < n; ++j)
        for (std::int64_t g = 0; g < N; ++g)
            t.step[j][g] = phi.target.index_of(phi.target.add(phi.target.element_at(g), phi.images[j]));

    std::vector<bool> visited(N, false);
    visited[0] = true;
    std::deque<std::int64_t> queue{0};
    while (!queue.empty()) {
        std::int64_t g = queue.front();
        queue.pop_front();
        for (int j = 0; j < n; ++j) {
            std::int64_t h = t.step[j][g];
            if (!visited[h]) {
                visited[h] = true;
                t.is_tree[j][g] = true;
                queue.push_back(h);
            }
        }
    }
    if (!std::all_of(visited.begin(), visited.end(), [](bool v) { return v; }))
        throw std::logic_error("reidemeister_schreier: target not reachable from generator images");

    int next = 0;
    for (std::int64_t g = 0; g < N; ++g)
        for (int j = 0; j < n; ++j)
            if (!t.is_tree[j][g]) t.schreier_gen[j][g] = next++;
    t.generator_count = next;
    return t;
}

Word rewrite_from(const SchreierTree& t, const Epimorphism& phi, const Word& w, std::int64_t start) {
    std::vector<Letter> out;
    std::int64_t cur = start;
    for (const Letter& l : w.letters()) {
        if (l.exp > 0) {
            if (!t.is_tree[l.gen][cur]) out.push_back({t.schreier_gen[l.gen][cur], 1});
            cur = t.step[l.gen][cur];
        } else {
            // find the source vertex of the traversed edge
            std::int64_t prev = phi.target.index_of(phi.target.add(
                phi.target.element_at(cur), phi.target.negate(phi.images[l.gen])));
            if (!t.is_tree[l.gen][prev]) out.push_back({t.schreier_gen[l.gen][prev], -1});
            cur = prev;
        }
    }
    return Word::from_letters(std::move(out));
}

}  // namespace

FinitePresentation reidemeister_schreier(const FinitePresentation& p, const Epimorphism& phi) {
    validate_epimorphism(phi, p);
    const std::int64_t N = phi.target.order();
    SchreierTree tree = build_schreier_tree(phi, p.generators);

    FinitePresentation out;
    out.generators = tree.generator_count;
    for (std::int64_t g = 0; g < N; ++g)
        for (const Word& r : p.relators) out.relators.push_back(rewrite_from(tree, phi, r, g));
    return out;
}

FinitePresentation catalog_free(int n) {
    if (n < 0) throw std::invalid_argument("catalog free: need n >= 0");
    return {n, {}};
}

FinitePresentation catalog_cyclic(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("catalog cyclic: need order m >= 1");
    return {1, {Word::power(0, m)}};
}

FinitePresentation catalog_torus() {
    return {2, {Word::commutator(0, 1)}};
}

FinitePresentation catalog_klein_bottle() {
    return {2, {Word::from_letters({{0, 1}, {1, 1}, {0, 1}, {1, -1}})}};
}

FinitePresentation catalog_abelian(int r, const std::vector<std::int64_t>& d) {
    if (r < 0) throw std::invalid_argument("catalog abelian: need free rank r >= 0");
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] <= 1) throw std::invalid_argument("catalog abelian: invariant factors must exceed 1");
        if (i + 1 < d.size() && d[i + 1] % d[i] != 0)
            throw std::invalid_argument("catalog abelian: invariant factors must form a divisibility chain");
    }
    const int k = static_cast<int>(d.size());
    FinitePresentation p;
    p.generators = r + k;
    for (int j = 0; j < k; ++j) p.relators.push_back(Word::power(r + j, d[j]));
    for (int u = 0; u < r + k; ++u)
        for (int v = u + 1; v < r + k; ++v) p.relators.push_back(Word::commutator(u, v));
    return p;
}

FinitePresentation catalog_quaternionic(std::int64_t n, std::int64_t k, std::int64_t l) {
    if (n < 1 || k < 1 || l < 1) throw std::invalid_argument("catalog Q(8n,k,l): parameters must be positive");
    if (std::gcd(8 * n, k) != 1 || std::gcd(8 * n, l) != 1 || std::gcd(k, l) != 1)
        throw std::invalid_argument("catalog Q(8n,k,l): 8n, k, l must be pairwise coprime");
    std::int64_t r = -1;
    for (std::int64_t c = 0; c < k * l; ++c) {
        if (c % k == (k - 1) % k && c % l == 1 % l) {
            r = c;
            break;
        }
    }
    if (r < 0) throw std::invalid_argument("catalog Q(8n,k,l): no twist exponent r with r = -1 mod k, r = +1 mod l");

    const int x = 0, y = 1, z = 2;
    Word xy = Word::generator(x) * Word::generator(y);
    FinitePresentation p;
    p.generators = 3;
    p.relators.push_back(Word::power(x, 2) * (xy * xy).inverse());
    p.relators.push_back(xy * xy * Word::power(y, 2 * n).inverse());
    p.relators.push_back(Word::power(z, k * l));
    p.relators.push_back(Word::generator(x) * Word::generator(z) * Word::generator(x).inverse() *
                         Word::power(z, r).inverse());
    p.relators.push_back(Word::generator(y) * Word::generator(z) * Word::generator(y).inverse() *
                         Word::generator(z));
    return p;
}

FinitePresentation catalog_swan(int k) {
    if (k < 1) throw std::invalid_argument("catalog swan: need k >= 1");
    const int x = 0;
    FinitePresentation p;
    p.generators = k + 1;
    p.relators.push_back(Word::power(x, 3));
    for (int i = 1; i <= k; ++i) p.relators.push_back(Word::power(i, 7));
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) p.relators.push_back(Word::commutator(i, j));
    for (int i = 1; i <= k; ++i)
        p.relators.push_back(Word::generator(x) * Word::generator(i) * Word::generator(x).inverse() *
                             Word::power(i, 2).inverse());
    return p;
}

FinitePresentation catalog(const std::string& name, const std::vector<std::int64_t>& params) {
    auto want = [&](std::size_t n) {
        if (params.size() != n)
            throw std::invalid_argument("catalog " + name + ": expected " + std::to_string(n) +
                                        " parameter(s), got " + std::to_string(params.size()));
    };
    if (name == "free") {
        want(1);
        return catalog_free(static_cast<int>(params[0]));
    }
    if (name == "cyclic") {
        want(1);
        return catalog_cyclic(params[0]);
    }
    if (name == "torus") {
        want(0);
        return catalog_torus();
    }
    if (name == "klein") {
        want(0);
        return catalog_klein_bottle();
    }
    if (name == "abelian") {
        if (params.empty()) throw std::invalid_argument("catalog abelian: need r followed by invariant factors");
        return catalog_abelian(static_cast<int>(params[0]), {params.begin() + 1, params.end()});
    }
    if (name == "quaternionic" || name == "Q") {
        want(3);
        return catalog_quaternionic(params[0], params[1], params[2]);
    }
    if (name == "swan") {
        want(1);
        return catalog_swan(static_cast<int>(params[0]));
    }
    throw std::invalid_argument("catalog: unknown presentation '" + name + "'");
}

}  // namespace rosekit::grouppres
