#include "rosekit/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rosekit::jsonio {

using exactla::Integer;
using exactla::IntegerMatrix;

namespace {

Integer integer_from_json(const json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    if (j.is_number_integer()) return Integer(j.get<long long>());
    throw std::invalid_argument("expected an integer or a decimal string, got " + j.dump());
}

json integer_to_json(const Integer& v) { return v.str(); }

}  // namespace

json to_json(const chain::ChainComplex& c) {
    json j;
    if (c.coefficients().integral())
        j["coeff"] = "Z";
    else
        j["coeff"] = json{{"p", c.coefficients().p}};
    j["dims"] = c.dims();
    json bd = json::array();
    for (int i = 1; i <= c.top_degree(); ++i) {
        const IntegerMatrix& b = c.boundary(i);
        json flat = json::array();
        for (int r = 0; r < b.rows(); ++r)
            for (int col = 0; col < b.cols(); ++col) flat.push_back(integer_to_json(b.at(r, col)));
        bd.push_back(std::move(flat));
    }
    j["boundaries"] = std::move(bd);
    return j;
}

chain::ChainComplex complex_from_json(const json& j) {
    chain::Coefficients coeff = chain::Coefficients::integers();
    const json& cj = j.at("coeff");
    if (cj.is_string()) {
        if (cj.get<std::string>() != "Z")
            throw std::invalid_argument("complex: coeff must be \"Z\" or {\"p\": prime}");
    } else {
        coeff = chain::Coefficients::mod(cj.at("p").get<std::int64_t>());
    }
    std::vector<int> dims = j.at("dims").get<std::vector<int>>();
    std::vector<IntegerMatrix> boundaries;
    const json& bd = j.at("boundaries");
    if (bd.size() + 1 != dims.size())
        throw std::invalid_argument("complex: expected one boundary list per adjacent degree pair");
    for (std::size_t i = 0; i < bd.size(); ++i) {
        const int rows = dims[i], cols = dims[i + 1];
        const json& flat = bd[i];
        if (static_cast<int>(flat.size()) != rows * cols)
            throw std::invalid_argument("complex: boundary " + std::to_string(i + 1) +
                                        " has wrong entry count");
        IntegerMatrix b(rows, cols);
        int idx = 0;
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) b.at(r, c) = integer_from_json(flat[idx++]);
        boundaries.push_back(std::move(b));
    }
    return chain::ChainComplex(coeff, std::move(dims), std::move(boundaries));
}

json to_json(const grouppres::FinitePresentation& p) {
    json j;
    j["generators"] = p.generators;
    json rel = json::array();
    for (const grouppres::Word& r : p.relators) rel.push_back(r.str(p.generators));
    j["relators"] = std::move(rel);
    return j;
}

grouppres::FinitePresentation presentation_from_json(const json& j) {
    grouppres::FinitePresentation p;
    p.generators = j.at("generators").get<int>();
    for (const json& r : j.at("relators"))
        p.relators.push_back(grouppres::Word::parse(r.get<std::string>(), p.generators));
    p.validate();
    return p;
}

json to_json(const grouppres::Epimorphism& phi) {
    json j;
    j["target"] = phi.target.factors;
    j["images"] = phi.images;
    return j;
}

grouppres::Epimorphism epimorphism_from_json(const json& j) {
    grouppres::Epimorphism phi{
        grouppres::AbelianTarget(j.at("target").get<std::vector<std::int64_t>>()), {}};
    for (const json& img : j.at("images")) {
        auto e = img.get<std::vector<std::int64_t>>();
        if (static_cast<int>(e.size()) != phi.target.coords())
            throw std::invalid_argument("epimorphism: image has wrong coordinate count");
        phi.images.push_back(phi.target.reduce(std::move(e)));
    }
    return phi;
}

namespace {

std::vector<std::int64_t> parse_target_factors(const std::string& text) {
    std::vector<std::int64_t> factors;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, 'x')) {
        std::size_t caret = part.find('^');
        std::string base = caret == std::string::npos ? part : part.substr(0, caret);
        long long reps = caret == std::string::npos ? 1 : std::stoll(part.substr(caret + 1));
        if (base.empty() || (base[0] != 'Z' && base[0] != 'z'))
            throw std::invalid_argument("epimorphism: target factor '" + part + "' must look like Z<d>");
        std::int64_t d = std::stoll(base.substr(1));
        for (long long i = 0; i < reps; ++i) factors.push_back(d);
    }
    return factors;
}

std::vector<std::int64_t> parse_image_tuple(const std::string& text, int coords) {
    std::string body = text;
    body.erase(std::remove_if(body.begin(), body.end(),
                              [](char c) { return c == '(' || c == ')' || c == ' '; }),
               body.end());
    std::vector<std::int64_t> e;
    std::istringstream in(body);
    std::string part;
    while (std::getline(in, part, ';')) e.push_back(std::stoll(part));
    if (static_cast<int>(e.size()) != coords)
        throw std::invalid_argument("epimorphism: image '" + text + "' needs " +
                                    std::to_string(coords) + " coordinate(s)");
    return e;
}

}  // namespace

grouppres::Epimorphism parse_epimorphism_text(const std::string& text, int generator_count) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("epimorphism: expected \"<target>: a-><v>, b-><v>, ...\"");
    grouppres::AbelianTarget target(parse_target_factors(text.substr(0, colon)));

    std::vector<std::vector<std::int64_t>> images(generator_count, target.zero());
    std::vector<bool> seen(generator_count, false);
    std::string rest = text.substr(colon + 1);
    // images separated by commas; tuple coordinates use ';' to stay unambiguous,
    // but bare "(1,0)" style tuples are accepted too by splitting carefully
    std::vector<std::string> assignments;
    int depth = 0;
    std::string cur;
    for (char ch : rest) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            assignments.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) assignments.push_back(cur);

    for (std::string a : assignments) {
        const std::size_t arrow = a.find("->");
        if (arrow == std::string::npos)
            throw std::invalid_argument("epimorphism: assignment '" + a + "' is missing '->'");
        std::string name = a.substr(0, arrow);
        name.erase(std::remove(name.begin(), name.end(), ' '), name.end());
        const grouppres::Word w = grouppres::Word::parse(name, generator_count);
        if (w.size() != 1 || w.letters()[0].exp != 1)
            throw std::invalid_argument("epimorphism: '" + name + "' is not a generator");
        std::string value = a.substr(arrow + 2);
        for (char& ch : value)
            if (ch == ',') ch = ';';
        images[w.letters()[0].gen] = target.reduce(parse_image_tuple(value, target.coords()));
        seen[w.letters()[0].gen] = true;
    }
    for (int j = 0; j < generator_count; ++j)
        if (!seen[j])
            throw std::invalid_argument("epimorphism: no image given for generator " +
                                        grouppres::generator_name(j, generator_count));
    return {std::move(target), std::move(images)};
}

json to_json(const chain::HomologyProfile& h) {
    json j = json::array();
    for (const auto& e : h.by_degree) {
        json entry;
        entry["betti"] = e.betti;
        json tor = json::array();
        for (const Integer& t : e.torsion) tor.push_back(integer_to_json(t));
        entry["torsion"] = std::move(tor);
        j.push_back(std::move(entry));
    }
    return j;
}

json to_json(const abelian::FgAbelianGroup& a) {
    json j;
    j["free_rank"] = a.r;
    json d = json::array();
    for (const Integer& v : a.d) d.push_back(integer_to_json(v));
    j["invariant_factors"] = std::move(d);
    return j;
}

json to_json(const abelian::GapReport& r) {
    json j;
    j["group"] = r.group.str();
    j["field"] = r.field.str();
    j["b1"] = r.b1;
    j["b2"] = r.b2;
    j["def"] = r.deficiency;
    j["gap"] = r.gap;
    return j;
}

json to_json(const modrep::ModuleDecomposition& d) {
    json j;
    j["p"] = d.p;
    j["multiplicities"] = d.multiplicities;
    return j;
}

json to_json(const roselab::RoseVerdict& v) {
    json j;
    j["p"] = v.p;
    j["is_rose"] = v.is_rose;
    j["is_acyclic"] = v.is_acyclic;
    j["petals"] = v.petals;
    j["euler"] = v.euler;
    j["betti"] = v.betti;
    if (v.h1) {
        json h;
        h["free_rank"] = v.h1->free_rank;
        json tor = json::array();
        for (const Integer& t : v.h1->torsion) tor.push_back(integer_to_json(t));
        h["torsion"] = std::move(tor);
        h["has_p_torsion"] = v.h1->has_p_torsion;
        j["h1"] = std::move(h);
        j["h1_structure_ok"] = v.h1_structure_ok;
    }
    return j;
}

json to_json(const roselab::Theorem1Report& r) {
    json j;
    j["rank"] = r.rank;
    j["group_order"] = r.group_order;
    j["base"] = to_json(r.base);
    j["cover"] = to_json(r.cover);
    j["biconditional_ok"] = r.biconditional_ok;
    j["euler_ok"] = r.euler_ok;
    if (r.expected_petals) j["expected_petals"] = *r.expected_petals;
    j["petal_formula_ok"] = r.petal_formula_ok;
    j["ok"] = r.ok();
    return j;
}

json to_json(const roselab::CarlssonReport& r) {
    json j;
    j["rank"] = r.rank;
    j["hypothesis_checkable"] = r.hypothesis_checkable;
    if (r.hypothesis_checkable) {
        j["b1_cover"] = r.b1_cover;
        j["b1_bound"] = r.b1_bound;
        j["betti_sum"] = r.betti_sum;
        j["sum_bound"] = r.sum_bound;
        j["b1_bound_ok"] = r.b1_bound_ok;
        j["sum_bound_ok"] = r.sum_bound_ok;
        if (r.sharper) {
            j["sharper"] = *r.sharper;
            j["sharper_ok"] = r.sharper_ok;
        }
    }
    j["ok"] = r.ok();
    return j;
}

json to_json(const roselab::ScreeningReport& r, int generator_count) {
    json j;
    j["generators"] = r.presentation.generators;
    j["relators"] = r.presentation.relator_count();
    j["def"] = r.def_presentation;
    j["h1"] = r.h1.str();
    json rows = json::array();
    for (const roselab::LedgerRow& row : r.rows) {
        json rj;
        rj["field"] = row.field.str();
        rj["b1"] = row.b1;
        rj["b2"] = row.b2;
        rj["morse_ok"] = row.morse_ok;
        if (row.supplied_group_b2) rj["supplied_group_b2"] = *row.supplied_group_b2;
        if (row.gap_upper_bound) rj["gap_upper_bound"] = *row.gap_upper_bound;
        rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    if (!r.flags.empty()) {
        json flags = json::array();
        for (const roselab::ConditionFlag& f : r.flags) {
            json fj;
            fj["condition"] = f.condition;
            fj["status"] = roselab::to_string(f.status);
            if (!f.detail.empty()) fj["detail"] = f.detail;
            flags.push_back(std::move(fj));
        }
        j["flags"] = std::move(flags);
    }
    (void)generator_count;
    return j;
}

json to_json(const std::vector<covers::SeriesStage>& stages) {
    json j = json::array();
    for (const covers::SeriesStage& s : stages) {
        json sj;
        sj["generators"] = s.presentation.generators;
        sj["relators"] = s.presentation.relator_count();
        sj["b1"] = s.b1;
        sj["b2"] = s.b2;
        j.push_back(std::move(sj));
    }
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
    }
}

}  // namespace rosekit::jsonio
