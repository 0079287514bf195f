#include "rosekit/cli.hpp"

#include "rosekit/abelian.hpp"
#include "rosekit/chain.hpp"
#include "rosekit/covers.hpp"
#include "rosekit/exactla.hpp"
#include "rosekit/grouppres.hpp"
#include "rosekit/json_io.hpp"
#include "rosekit/modrep.hpp"
#include "rosekit/roselab.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rosekit::cli {

namespace {

using jsonio::json;

int thread_budget() {
    const char* env = std::getenv("ROSEKIT_THREADS");
    if (env == nullptr) return 1;
    int n = std::atoi(env);
    return n < 1 ? 1 : n;
}

// chunked parallel map with deterministic output order
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const int threads = std::min<std::size_t>(thread_budget(), count == 0 ? 1 : count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t i = t; i < count; i += threads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

abelian::FieldSpec parse_field(const std::string& text) {
    if (text == "Q" || text == "q" || text == "0") return abelian::FieldSpec::rationals();
    std::string t = text;
    if (t.rfind("p=", 0) == 0) t = t.substr(2);
    return abelian::FieldSpec::mod(std::stoll(t));
}

std::vector<abelian::FieldSpec> parse_field_list(const std::string& text) {
    std::vector<abelian::FieldSpec> fields;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) fields.push_back(parse_field(part));
    if (fields.empty()) throw std::invalid_argument("empty field list");
    return fields;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) out.push_back(std::stoll(part));
    return out;
}

grouppres::FinitePresentation load_presentation(const std::string& path) {
    return jsonio::presentation_from_json(jsonio::load_json_file(path));
}

grouppres::Epimorphism resolve_epimorphism(const std::string& spec, int generators) {
    // file path when it parses as JSON on disk, inline syntax otherwise
    if (spec.find("->") == std::string::npos)
        return jsonio::epimorphism_from_json(jsonio::load_json_file(spec));
    return jsonio::parse_epimorphism_text(spec, generators);
}

void emit(std::ostream& out, const json& j, bool as_json, const std::function<void()>& text_mode) {
    if (as_json)
        out << j.dump(2) << "\n";
    else
        text_mode();
}

std::string profile_line(const chain::HomologyProfile& h) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < h.by_degree.size(); ++i)
        os << (i == 0 ? "" : ", ") << h.by_degree[i].betti;
    os << ")";
    return os.str();
}

std::string dims_line(const std::vector<int>& d) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < d.size(); ++i) os << (i == 0 ? "" : ", ") << d[i];
    os << ")";
    return os.str();
}

int cmd_homology(const std::string& path, const std::optional<std::string>& field, bool as_json,
                 std::ostream& out) {
    chain::ChainComplex c = jsonio::complex_from_json(jsonio::load_json_file(path));
    if (field) {
        abelian::FieldSpec f = parse_field(*field);
        if (!f.rational()) {
            if (c.coefficients().integral())
                c = chain::reduce_mod_p(c, f.p);
            else if (c.coefficients().p != f.p)
                throw std::invalid_argument("complex is over " + c.coefficients().str() +
                                            ", cannot ask for " + f.str());
        } else if (!c.coefficients().integral()) {
            throw std::invalid_argument("complex is over " + c.coefficients().str() +
                                        ", rational betti numbers need integral input");
        }
    }
    const chain::HomologyProfile h = chain::homology(c);
    json j;
    j["coeff"] = c.coefficients().str();
    j["euler"] = chain::euler_characteristic(c);
    j["homology"] = jsonio::to_json(h);
    emit(out, j, as_json, [&] {
        out << "coefficients: " << c.coefficients().str() << "\n";
        out << "betti " << profile_line(h) << ", euler " << chain::euler_characteristic(c) << "\n";
        out << h.str() << "\n";
    });
    return 0;
}

int cmd_presentation(const std::string& path, bool as_json, std::ostream& out) {
    grouppres::FinitePresentation p = load_presentation(path);
    const chain::ChainComplex k = grouppres::presentation_complex(p);
    const abelian::FgAbelianGroup h1 = roselab::abelianization(p);
    json j = jsonio::to_json(p);
    j["def"] = p.deficiency();
    j["h1"] = jsonio::to_json(h1);
    j["complex_dims"] = k.dims();
    emit(out, j, as_json, [&] {
        out << "generators: " << p.generators << ", relators: " << p.relator_count()
            << ", def = " << p.deficiency() << "\n";
        out << "H_1 = " << h1.str() << "\n";
    });
    return 0;
}

int cmd_catalog(const std::string& name, const std::vector<std::int64_t>& params, std::ostream& out) {
    out << jsonio::to_json(grouppres::catalog(name, params)).dump(2) << "\n";
    return 0;
}

int cmd_cover(const std::string& pres_path, const std::string& epi_spec, const std::string& check,
              std::optional<std::int64_t> p_opt, const std::string& emit_path, bool as_json,
              std::ostream& out) {
    covers::CoverSpec spec;
    spec.base = load_presentation(pres_path);
    spec.epi = resolve_epimorphism(epi_spec, spec.base.generators);

    auto infer_p = [&]() -> std::int64_t {
        if (p_opt) return *p_opt;
        if (spec.epi.target.factors.empty())
            throw std::invalid_argument("cannot infer p from a trivial target; pass --p");
        return spec.epi.target.factors[0];
    };

    if (check == "theorem1") {
        const roselab::Theorem1Report rep = roselab::verify_theorem1(spec, infer_p());
        emit(out, jsonio::to_json(rep), as_json, [&] {
            out << "base: " << (rep.base.is_rose ? "rose" : rep.base.is_acyclic ? "acyclic" : "not a rose")
                << " (m = " << rep.base.petals << "), cover: "
                << (rep.cover.is_rose ? "rose" : rep.cover.is_acyclic ? "acyclic" : "not a rose")
                << " (m = " << rep.cover.petals << ")\n";
            if (rep.expected_petals) out << "petals: " << rep.base.petals << " -> " << rep.cover.petals
                                         << " (expected " << *rep.expected_petals << ")\n";
            out << "euler: " << rep.base.euler << " -> " << rep.cover.euler << " (factor "
                << rep.group_order << ")\n";
            out << (rep.ok() ? "consistent" : "VIOLATION") << "\n";
        });
        return rep.ok() ? 0 : 1;
    }
    if (check == "carlsson") {
        const roselab::CarlssonReport rep = roselab::verify_carlsson(spec, infer_p());
        emit(out, jsonio::to_json(rep), as_json, [&] {
            if (!rep.hypothesis_checkable) {
                out << "hypothesis not checkable (base b_2 != 0); no assertion\n";
                return;
            }
            out << "b_1(cover) = " << rep.b1_cover << " >= " << rep.b1_bound << ": "
                << (rep.b1_bound_ok ? "ok" : "VIOLATION") << "\n";
            out << "sum b_i = " << rep.betti_sum << " >= " << rep.sum_bound << ": "
                << (rep.sum_bound_ok ? "ok" : "VIOLATION") << "\n";
            if (rep.sharper)
                out << "sharper value " << *rep.sharper << ": " << (rep.sharper_ok ? "ok" : "VIOLATION")
                    << "\n";
        });
        return rep.ok() ? 0 : 1;
    }
    if (!check.empty() && check != "none")
        throw std::invalid_argument("unknown --check '" + check + "' (theorem1, carlsson)");

    const covers::CoverComplex cover = covers::build_cover(spec);
    if (!emit_path.empty()) {
        std::ofstream f(emit_path);
        if (!f) throw std::invalid_argument("cannot write '" + emit_path + "'");
        f << jsonio::to_json(cover.complex()).dump(2) << "\n";
    }
    const chain::HomologyProfile h = chain::homology(cover.complex());
    json j;
    j["group"] = spec.epi.target.str();
    j["dims"] = cover.complex().dims();
    j["euler"] = chain::euler_characteristic(cover.complex());
    j["homology"] = jsonio::to_json(h);
    emit(out, j, as_json, [&] {
        out << "cover over " << spec.epi.target.str() << ", dims " << dims_line(cover.complex().dims())
            << "\n";
        out << "euler " << chain::euler_characteristic(cover.complex()) << "\n" << h.str() << "\n";
    });
    return 0;
}

int cmd_series(const std::string& pres_path, std::int64_t p, int depth, bool as_json,
               std::ostream& out) {
    const auto stages = covers::subnormal_series(load_presentation(pres_path), p, depth);
    emit(out, jsonio::to_json(stages), as_json, [&] {
        out << "stage\tgens\trels\tb1\tb2\n";
        for (std::size_t i = 0; i < stages.size(); ++i)
            out << i << "\t" << stages[i].presentation.generators << "\t"
                << stages[i].presentation.relator_count() << "\t" << stages[i].b1 << "\t"
                << stages[i].b2 << "\n";
    });
    return 0;
}

int cmd_rose_check(const std::optional<std::string>& pres_path,
                   const std::optional<std::string>& complex_path, std::int64_t p, bool as_json,
                   std::ostream& out) {
    if (pres_path.has_value() == complex_path.has_value())
        throw std::invalid_argument("pass exactly one of --pres, --complex");
    const chain::ChainComplex c =
        pres_path ? grouppres::presentation_complex(load_presentation(*pres_path))
                  : jsonio::complex_from_json(jsonio::load_json_file(*complex_path));
    const roselab::RoseVerdict v = roselab::rose_check(c, p);
    emit(out, jsonio::to_json(v), as_json, [&] {
        if (v.is_rose)
            out << "mod-" << p << " homology rose with " << v.petals << " petal(s)\n";
        else if (v.is_acyclic)
            out << "mod-" << p << " acyclic\n";
        else
            out << "not a mod-" << p << " homology rose\n";
        out << "betti:";
        for (long long b : v.betti) out << " " << b;
        out << ", euler " << v.euler << "\n";
        if (v.h1)
            out << "H_1 free rank " << v.h1->free_rank << ", " << v.h1->torsion.size()
                << " torsion factor(s), p-torsion: " << (v.h1->has_p_torsion ? "yes" : "no") << "\n";
    });
    return 0;
}

int cmd_gap_table(int rmax, int kmax, const std::string& primes, const std::string& divisors,
                  bool as_json, std::ostream& out) {
    std::vector<abelian::FieldSpec> fields{abelian::FieldSpec::rationals()};
    for (std::int64_t p : parse_int_list(primes)) fields.push_back(abelian::FieldSpec::mod(p));
    const std::vector<std::int64_t> div = parse_int_list(divisors);

    // all divisibility chains of length <= kmax over the divisor pool
    std::vector<std::vector<std::int64_t>> chains{{}};
    std::vector<std::vector<std::int64_t>> frontier{{}};
    for (int len = 1; len <= kmax; ++len) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& c : frontier)
            for (std::int64_t d : div)
                if (d > 1 && (c.empty() || d % c.back() == 0)) {
                    auto ext = c;
                    ext.push_back(d);
                    next.push_back(ext);
                }
        chains.insert(chains.end(), next.begin(), next.end());
        frontier = std::move(next);
    }

    std::vector<abelian::FgAbelianGroup> groups;
    for (int r = 0; r <= rmax; ++r)
        for (const auto& c : chains) {
            abelian::FgAbelianGroup a;
            a.r = r;
            for (std::int64_t d : c) a.d.push_back(d);
            groups.push_back(std::move(a));
        }

    std::vector<std::vector<abelian::GapReport>> reports(groups.size());
    parallel_for(groups.size(), [&](std::size_t i) {
        for (abelian::FieldSpec f : fields) reports[i].push_back(abelian::gap(groups[i], f));
    });

    if (as_json) {
        json j = json::array();
        for (const auto& per_group : reports)
            for (const abelian::GapReport& r : per_group) j.push_back(jsonio::to_json(r));
        out << j.dump(2) << "\n";
    } else {
        out << "group\tfield\tb1\tb2\tdef\tgap\n";
        for (const auto& per_group : reports)
            for (const abelian::GapReport& r : per_group)
                out << r.group.str() << "\t" << r.field.str() << "\t" << r.b1 << "\t" << r.b2 << "\t"
                    << r.deficiency << "\t" << r.gap << "\n";
    }
    return 0;
}

std::map<std::int64_t, long long> parse_supplied(const std::string& text) {
    std::map<std::int64_t, long long> out;
    if (text.empty()) return out;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        const std::size_t eq = part.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected field=value, got '" + part + "'");
        out[parse_field(part.substr(0, eq)).p] = std::stoll(part.substr(eq + 1));
    }
    return out;
}

void print_screening(const roselab::ScreeningReport& rep, std::ostream& out) {
    out << "generators " << rep.presentation.generators << ", relators "
        << rep.presentation.relator_count() << ", def(P) = " << rep.def_presentation << "\n";
    out << "H_1 = " << rep.h1.str() << "\n";
    out << "field\tb1\tb2\tmorse\tgap_bound\n";
    for (const roselab::LedgerRow& row : rep.rows) {
        out << row.field.str() << "\t" << row.b1 << "\t" << row.b2 << "\t"
            << (row.morse_ok ? "ok" : "VIOLATION") << "\t";
        if (row.gap_upper_bound)
            out << *row.gap_upper_bound;
        else
            out << "-";
        out << "\n";
    }
    for (const roselab::ConditionFlag& f : rep.flags) {
        out << "[" << roselab::to_string(f.status) << "] " << f.condition;
        if (!f.detail.empty()) out << " -- " << f.detail;
        out << "\n";
    }
}

int cmd_ledger(const std::string& pres_path, const std::string& fields, const std::string& supplied,
               bool as_json, std::ostream& out) {
    const grouppres::FinitePresentation p = load_presentation(pres_path);
    const roselab::ScreeningReport rep =
        roselab::deficiency_ledger(p, parse_field_list(fields), parse_supplied(supplied));
    emit(out, jsonio::to_json(rep, p.generators), as_json, [&] { print_screening(rep, out); });
    return rep.morse_all_ok() ? 0 : 1;
}

int cmd_screen(const std::string& pres_path, const std::string& fields,
               const std::string& quotient_path, const std::string& quotient_abelian,
               const std::string& supplied_gap, const std::string& supplied_b2, bool as_json,
               std::ostream& out) {
    const grouppres::FinitePresentation p = load_presentation(pres_path);
    roselab::QuotientData q;
    if (!quotient_abelian.empty()) {
        const std::vector<std::int64_t> spec = parse_int_list(quotient_abelian);
        if (spec.empty()) throw std::invalid_argument("quotient spec: need r followed by torsion orders");
        std::vector<exactla::Integer> torsion(spec.begin() + 1, spec.end());
        q.gamma = abelian::FgAbelianGroup::canonical(spec[0], std::move(torsion));
    }
    if (!quotient_path.empty()) {
        const json j = jsonio::load_json_file(quotient_path);
        auto group_of = [](const json& g) {
            std::vector<exactla::Integer> torsion;
            for (const auto& t : g.at("invariant_factors"))
                torsion.push_back(t.is_string() ? exactla::Integer(t.get<std::string>())
                                                : exactla::Integer(t.get<long long>()));
            return abelian::FgAbelianGroup::canonical(g.at("free_rank").get<long long>(),
                                                      std::move(torsion));
        };
        if (j.contains("gamma")) q.gamma = group_of(j.at("gamma"));
        if (j.contains("gamma_h1")) q.gamma_h1 = group_of(j.at("gamma_h1"));
        if (j.contains("gap"))
            for (const auto& [k, v] : j.at("gap").items())
                q.supplied_gamma_gap[parse_field(k).p] = v.get<long long>();
        if (j.contains("b2"))
            for (const auto& [k, v] : j.at("b2").items())
                q.supplied_gamma_b2[parse_field(k).p] = v.get<long long>();
    }
    q.supplied_gamma_gap.merge(parse_supplied(supplied_gap));
    q.supplied_gamma_b2.merge(parse_supplied(supplied_b2));

    const roselab::ScreeningReport rep = roselab::screen_d2_conditions(p, q, parse_field_list(fields));
    emit(out, jsonio::to_json(rep, p.generators), as_json, [&] { print_screening(rep, out); });
    return 0;
}

int cmd_modrep_table(std::int64_t p, int jmax, bool as_json, std::ostream& out) {
    if (!exactla::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    json rows = json::array();
    if (!as_json) {
        out << "k\\j";
        for (int j = 0; j <= jmax; ++j) out << "\t" << j;
        out << "\n";
    }
    for (int k = 1; k <= p; ++k) {
        const exactla::PrimeFieldMatrix t =
            modrep::nilpotent_block(p, k) + exactla::PrimeFieldMatrix::identity(p, k);
        json row = json::array();
        if (!as_json) out << k;
        for (int j = 0; j <= jmax; ++j) {
            const long long dim = modrep::cohomology_zp(t, j);
            if (as_json)
                row.push_back(dim);
            else
                out << "\t" << dim;
        }
        if (as_json)
            rows.push_back(std::move(row));
        else
            out << "\n";
    }
    if (as_json) {
        json j;
        j["p"] = p;
        j["dims"] = std::move(rows);
        out << j.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rosekit: exact homology of finite 2-complexes, abelian covers and group invariants"};
    app.require_subcommand(1);

    // homology
    std::string hc_complex, hc_field_raw;
    bool hc_json = false;
    auto* hc = app.add_subcommand("homology", "betti numbers and torsion of a chain complex");
    hc->add_option("--complex", hc_complex, "chain complex JSON file")->required();
    auto* hc_field_opt = hc->add_option("--field", hc_field_raw, "Q or a prime (also p=<prime>)");
    hc->add_flag("--json", hc_json, "machine-readable output");

    // presentation
    std::string pr_path;
    bool pr_json = false;
    auto* pr = app.add_subcommand("presentation", "presentation complex summary and abelianization");
    pr->add_option("--pres", pr_path, "presentation JSON file")->required();
    pr->add_flag("--json", pr_json, "machine-readable output");

    // catalog
    std::string cat_name, cat_params;
    auto* cat = app.add_subcommand("catalog", "named presentations as JSON");
    cat->add_option("--name", cat_name, "free, cyclic, torus, klein, abelian, quaternionic, swan")
        ->required();
    cat->add_option("--params", cat_params, "comma-separated integer parameters");

    // cover
    std::string cv_pres, cv_epi, cv_check, cv_emit;
    std::int64_t cv_p = 0;
    bool cv_json = false;
    auto* cv = app.add_subcommand("cover", "build a finite abelian cover of a presentation complex");
    cv->add_option("--pres", cv_pres, "presentation JSON file")->required();
    cv->add_option("--epi", cv_epi, "epimorphism: JSON file or inline \"Z2: a->1, b->0\"")->required();
    cv->add_option("--check", cv_check, "theorem1 or carlsson");
    auto* cv_p_opt = cv->add_option("--p", cv_p, "prime (default: first target factor)");
    cv->add_option("--emit-complex", cv_emit, "write the cover chain complex JSON here");
    cv->add_flag("--json", cv_json, "machine-readable output");

    // series
    std::string se_pres;
    std::int64_t se_p = 2;
    int se_depth = 1;
    bool se_json = false;
    auto* se = app.add_subcommand("series", "iterated index-p subgroup presentations and betti numbers");
    se->add_option("--pres", se_pres, "presentation JSON file")->required();
    se->add_option("--p", se_p, "prime")->required();
    se->add_option("--depth", se_depth, "number of covering steps")->required();
    se->add_flag("--json", se_json, "machine-readable output");

    // rose-check
    std::string rc_pres, rc_complex;
    std::int64_t rc_p = 2;
    bool rc_json = false;
    auto* rc = app.add_subcommand("rose-check", "mod-p homology rose / acyclic verdict");
    auto* rc_pres_opt = rc->add_option("--pres", rc_pres, "presentation JSON file");
    auto* rc_cx_opt = rc->add_option("--complex", rc_complex, "chain complex JSON file");
    rc->add_option("--p", rc_p, "prime")->required();
    rc->add_flag("--json", rc_json, "machine-readable output");

    // carlsson
    std::string ca_pres, ca_epi;
    std::int64_t ca_p = 0;
    bool ca_json = false;
    auto* ca = app.add_subcommand("carlsson", "betti lower bounds for an elementary abelian cover");
    ca->add_option("--pres", ca_pres, "presentation JSON file")->required();
    ca->add_option("--epi", ca_epi, "epimorphism spec")->required();
    auto* ca_p_opt = ca->add_option("--p", ca_p, "prime (default: first target factor)");
    ca->add_flag("--json", ca_json, "machine-readable output");

    // gap-table
    int gt_rmax = 2, gt_kmax = 2;
    std::string gt_primes = "2,3", gt_divisors = "2,3,4,6,12";
    bool gt_json = false;
    auto* gt = app.add_subcommand("gap-table", "gap reports for a sweep of abelian groups (TSV)");
    gt->add_option("--rmax", gt_rmax, "max free rank");
    gt->add_option("--kmax", gt_kmax, "max torsion chain length");
    gt->add_option("--primes", gt_primes, "comma-separated primes");
    gt->add_option("--divisors", gt_divisors, "torsion order pool");
    gt->add_flag("--json", gt_json, "machine-readable output");

    // ledger
    std::string le_pres, le_fields = "Q,2,3", le_supplied;
    bool le_json = false;
    auto* le = app.add_subcommand("ledger", "deficiency / betti ledger of a presentation");
    le->add_option("--pres", le_pres, "presentation JSON file")->required();
    le->add_option("--fields", le_fields, "comma-separated fields (Q and primes)");
    le->add_option("--group-b2", le_supplied, "known b_2 of the group, e.g. Q=0,2=1");
    le->add_flag("--json", le_json, "machine-readable output");

    // screen
    std::string sc_pres, sc_fields = "Q", sc_quotient, sc_quotient_abelian, sc_gap, sc_b2;
    bool sc_json = false;
    auto* sc = app.add_subcommand("screen", "screen a candidate extension against the counterexample conditions");
    sc->add_option("--pres", sc_pres, "presentation JSON file for G")->required();
    sc->add_option("--fields", sc_fields, "comma-separated fields");
    sc->add_option("--quotient", sc_quotient, "quotient data JSON file");
    sc->add_option("--quotient-abelian", sc_quotient_abelian,
                   "abelian quotient as r,d1,d2,... (free rank first)");
    sc->add_option("--gamma-gap", sc_gap, "supplied gap values, e.g. Q=1");
    sc->add_option("--gamma-b2", sc_b2, "supplied b_2 values for the quotient");
    sc->add_flag("--json", sc_json, "machine-readable output");

    // modrep-table
    std::int64_t mt_p = 3;
    int mt_jmax = 6;
    bool mt_json = false;
    auto* mt = app.add_subcommand("modrep-table", "dim H^j(Z_p; R_k) table");
    mt->add_option("--p", mt_p, "prime")->required();
    mt->add_option("--jmax", mt_jmax, "largest cohomological degree");
    mt->add_flag("--json", mt_json, "machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (hc->parsed())
            return cmd_homology(hc_complex,
                                hc_field_opt->count() ? std::optional(hc_field_raw) : std::nullopt,
                                hc_json, out);
        if (pr->parsed()) return cmd_presentation(pr_path, pr_json, out);
        if (cat->parsed()) return cmd_catalog(cat_name, parse_int_list(cat_params), out);
        if (cv->parsed())
            return cmd_cover(cv_pres, cv_epi, cv_check,
                             cv_p_opt->count() ? std::optional(cv_p) : std::nullopt, cv_emit, cv_json,
                             out);
        if (se->parsed()) return cmd_series(se_pres, se_p, se_depth, se_json, out);
        if (rc->parsed())
            return cmd_rose_check(rc_pres_opt->count() ? std::optional(rc_pres) : std::nullopt,
                                  rc_cx_opt->count() ? std::optional(rc_complex) : std::nullopt, rc_p,
                                  rc_json, out);
        if (ca->parsed())
            return cmd_cover(ca_pres, ca_epi, "carlsson",
                             ca_p_opt->count() ? std::optional(ca_p) : std::nullopt, "", ca_json, out);
        if (gt->parsed()) return cmd_gap_table(gt_rmax, gt_kmax, gt_primes, gt_divisors, gt_json, out);
        if (le->parsed()) return cmd_ledger(le_pres, le_fields, le_supplied, le_json, out);
        if (sc->parsed())
            return cmd_screen(sc_pres, sc_fields, sc_quotient, sc_quotient_abelian, sc_gap, sc_b2,
                              sc_json, out);
        if (mt->parsed()) return cmd_modrep_table(mt_p, mt_jmax, mt_json, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace rosekit::cli
