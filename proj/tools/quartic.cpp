#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quartic/io/json.hpp"
#include "quartic/verify/suites.hpp"

namespace {

using namespace quartic;

struct Options {
    std::string field = "Q";
    std::uint64_t seed = 0;
    bool json = false;
    std::string input_file;
    std::string form;
    bool ternary = false;
    bool derived_check = false;
    std::string suite = "all";
};

std::string read_input(const Options& o) {
    if (!o.form.empty()) return o.form;
    std::ostringstream s;
    if (!o.input_file.empty()) {
        std::ifstream in(o.input_file);
        if (!in) fail(ErrorKind::InvalidArgument, "cannot read '" + o.input_file + "'");
        s << in.rdbuf();
    } else {
        s << std::cin.rdbuf();
    }
    std::string text = s.str();
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    if (text.empty()) fail(ErrorKind::InvalidArgument, "no input given");
    return text;
}

void render(const json& j, std::ostream& out, int depth = 0) {
    std::string pad(2 * depth, ' ');
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) {
            if (v.is_structured() && !v.empty()) {
                out << pad << k << ":\n";
                render(v, out, depth + 1);
            } else {
                out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        bool flat = true;
        for (auto& v : j) flat = flat && !v.is_structured();
        if (flat) {
            out << pad << "[";
            for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
            out << "]\n";
        } else {
            for (auto& v : j) {
                out << pad << "-\n";
                render(v, out, depth + 1);
            }
        }
    } else {
        out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const Options& o, const json& j) {
    if (o.json) std::cout << j.dump() << "\n";
    else render(j, std::cout);
}

template <class K>
json binary_invariants(const Poly<K>& p) {
    auto b = BinaryQuartic<K>::from_poly(p);
    return {{"S", invariant_S(b).to_string()}, {"T", invariant_T(b).to_string()}, {"S3", invariant_S3(b).to_string()},
            {"S4", invariant_S4(b).to_string()}};
}

template <class K>
json ternary_invariants(const Poly<K>& p) {
    auto q = TernaryQuartic<K>::from_poly(p);
    return {{"A", invariant_A(q).to_string()}, {"H", harmonic_quartic(q).to_string()}, {"K", harmonic_sextic(q).to_string()}};
}

bool uses_x(const std::string& text) {
    Poly<Rational> p = parse_rational_polynomial(text);
    int xi = p.vars()->index_of("x");
    for (auto& [e, c] : p.terms())
        if (e[xi] > 0) return true;
    return false;
}

int cmd_invariants(const Options& o) {
    std::string text = read_input(o);
    bool binary = !o.ternary && !uses_x(text);
    json out = visit_ring(RingSpec::parse(o.field), [&](auto ring) -> json {
        json j = binary ? binary_invariants(parse_polynomial(text, ring, vars_yz())) : ternary_invariants(parse_polynomial(text, ring, vars_xyz()));
        j["form"] = binary ? "binary" : "ternary";
        j["field"] = o.field;
        return j;
    });
    emit(o, out);
    return 0;
}

int cmd_harmonic(const Options& o) {
    std::string text = read_input(o);
    json out = visit_ring(RingSpec::parse(o.field), [&](auto ring) -> json {
        auto q = TernaryQuartic<decltype(ring.one())>::from_poly(parse_polynomial(text, ring, vars_xyz()));
        return {{"H", harmonic_quartic(q).to_string()}, {"K", harmonic_sextic(q).to_string()}, {"field", o.field}};
    });
    emit(o, out);
    return 0;
}

PrimeField prime_field_of(const Options& o) {
    RingSpec spec = RingSpec::parse(o.field);
    if (spec.kind() != RingSpec::Kind::PrimeField) fail(ErrorKind::InvalidArgument, "this command needs --field Fp:<p>");
    return PrimeField{spec.p()};
}

int cmd_inflections(const Options& o) {
    std::string text = read_input(o);
    if (RingSpec::parse(o.field).kind() == RingSpec::Kind::Rationals) {
        // refuse non-finite schemes in any characteristic before asking for a prime
        SchemeClass c = classify_inflection_dimension(parse_polynomial(text, RationalField{}, vars_xyz()), o.seed);
        if (!is_finite(c)) fail(ErrorKind::NotFinite, label(c));
    }
    PrimeField F = prime_field_of(o);
    auto q = TernaryQuartic<Fp>::from_poly(parse_polynomial(text, F, vars_xyz()));
    auto cfg = inflection_configuration(q, o.seed);
    json out = configuration_json(cfg, SchemeClass::IsolatedDoublePoints);
    out["field"] = o.field;
    out["seed"] = std::to_string(o.seed);
    emit(o, out);
    return 0;
}

int cmd_classify(const Options& o) {
    std::string text = read_input(o);
    RingSpec spec = RingSpec::parse(o.field);
    SchemeClass c;
    if (spec.kind() == RingSpec::Kind::Rationals) c = classify_inflection_dimension(parse_polynomial(text, RationalField{}, vars_xyz()), o.seed);
    else if (spec.kind() == RingSpec::Kind::PrimeField) c = classify_inflection_dimension(parse_polynomial(text, PrimeField{spec.p()}, vars_xyz()), o.seed);
    else fail(ErrorKind::InvalidArgument, "classify needs --field Q or Fp:<p>");
    json out = scheme_class_json(c);
    out["field"] = o.field;
    emit(o, out);
    return 0;
}

template <class R>
json reconstruct_over(const R& ring, const json& input) {
    auto data = parse_hyperflex_data(input, ring);
    auto rec = reconstruct_from_hyperflexes_full(data);
    json idx = json::array();
    for (auto i : rec.frame_indices) idx.push_back(std::to_string(i));
    return {{"quartic", rec.quartic.to_poly().to_string()},
            {"frame_indices", idx},
            {"eps", rec.frame.eps.to_string()},
            {"lambda", rec.lambda.to_string()},
            {"mu", rec.mu.to_string()},
            {"nu", rec.nu.to_string()}};
}

int cmd_reconstruct(const Options& o) {
    json input;
    try {
        input = json::parse(read_input(o));
    } catch (const json::parse_error& e) {
        fail(ErrorKind::Parse, e.what());
    }
    RingSpec spec = RingSpec::parse(o.field);
    json out;
    if (spec.kind() == RingSpec::Kind::Rationals) out = reconstruct_over(RationalField{}, input);
    else if (spec.kind() == RingSpec::Kind::PrimeField) out = reconstruct_over(PrimeField{spec.p()}, input);
    else if (spec.kind() == RingSpec::Kind::ExtensionField) out = reconstruct_over(GaloisRing{spec.field()}, input);
    else fail(ErrorKind::InvalidArgument, "reconstruct needs --field Q, Fp:<p> or Fpk:<p>:<k>");
    out["field"] = o.field;
    emit(o, out);
    return 0;
}

template <class B>
json degenerate_over(const B& base, const std::string& text, bool derived) {
    using K = decltype(base.one());
    LocalRing<K> L{base};
    auto q = TernaryQuartic<Local<K>>::from_poly(parse_polynomial(text, L, vars_xyz()));
    json out{{"limit", k_reduction(q).to_poly().to_string()}, {"reduction", degenerate_harmonic(q).to_string()}};
    if (derived) {
        auto rep = derived_singularity_check(k_reduction(q), q);
        out["derived_singular_at_100"] = rep.pass;
        out["corner"] = vector_json(rep.corner);
    }
    return out;
}

int cmd_degenerate(const Options& o) {
    std::string text = read_input(o);
    RingSpec spec = RingSpec::parse(o.field);
    if (spec.kind() == RingSpec::Kind::ParameterLocal) spec = spec.base();
    json out;
    if (spec.kind() == RingSpec::Kind::Rationals) out = degenerate_over(RationalField{}, text, o.derived_check);
    else if (spec.kind() == RingSpec::Kind::PrimeField) out = degenerate_over(PrimeField{spec.p()}, text, o.derived_check);
    else fail(ErrorKind::InvalidArgument, "degenerate needs --field Q, Fp:<p> or local-t:<base>");
    out["field"] = o.field;
    emit(o, out);
    return out.contains("derived_singular_at_100") && !out["derived_singular_at_100"].get<bool>() ? 1 : 0;
}

int cmd_verify(const Options& o) {
    const auto& suites = verification_suites();
    std::vector<int> which;
    if (o.suite == "all") {
        for (int i = 1; i <= 10; ++i) which.push_back(i);
    } else {
        auto it = suites.find(o.suite);
        if (it == suites.end()) fail(ErrorKind::InvalidArgument, "unknown suite '" + o.suite + "'");
        which = it->second;
    }
    VerificationContext ctx(o.seed);
    bool all = true;
    json report = json::array();
    for (int i : which) {
        auto r = run_criterion(i, ctx);
        all = all && r.pass();
        json checks = json::array();
        for (auto& c : r.checks) {
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            if (!o.json) std::cout << (c.pass ? "PASS " : "FAIL ") << i << " " << c.name << (c.detail.empty() ? "" : " [" + c.detail + "]") << "\n";
        }
        report.push_back({{"criterion", std::to_string(i)}, {"title", r.title}, {"pass", r.pass()}, {"checks", checks}});
    }
    if (o.json) std::cout << json{{"suite", o.suite}, {"pass", all}, {"criteria", report}}.dump() << "\n";
    else std::cout << (all ? "all checks passed" : "some checks failed") << "\n";
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Invariants, inflection lines and hyperflex reconstruction of plane quartics"};
    app.require_subcommand(1);
    auto common = [&](CLI::App* c, bool positional = true) {
        c->add_option("--field", o.field, "coefficient ring: Q, Z, Fp:<p>, Fpk:<p>:<k>, dual:<base>, local-t:<base>");
        c->add_option("--seed", o.seed, "seed for randomized steps");
        c->add_flag("--json", o.json, "print compact JSON");
        c->add_option("--input", o.input_file, "read the form from a file instead of stdin");
        if (positional) c->add_option("form", o.form, "polynomial (default: read from --input or stdin)");
    };
    auto* inv = app.add_subcommand("invariants", "S, T, S3, S4 of a binary form in y, z; A, H, K of a ternary quartic");
    common(inv);
    inv->add_flag("--ternary", o.ternary, "treat a form without x as ternary");
    common(app.add_subcommand("harmonic", "harmonic quartic H and sextic K"));
    common(app.add_subcommand("inflections", "inflection lines with multiplicities over F_p"));
    common(app.add_subcommand("classify", "dimension class of the inflection scheme"));
    common(app.add_subcommand("reconstruct", "quartic from at least five hyperflexes given as JSON"));
    auto* deg = app.add_subcommand("degenerate", "k-reduction of H for a family in t");
    common(deg);
    deg->add_flag("--derived-check", o.derived_check, "also test that the derived quartic is singular at [1:0:0]");
    auto* ver = app.add_subcommand("verify", "run verification suites");
    common(ver, false);
    ver->add_option("--suite", o.suite, "identities, examples, degenerations, reconstruction, char13 or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << error_json("usage", e.what()).dump() << "\n";
        return 2;
    }

    try {
        auto* cmd = app.get_subcommands().front();
        const std::string name = cmd->get_name();
        if (name == "invariants") return cmd_invariants(o);
        if (name == "harmonic") return cmd_harmonic(o);
        if (name == "inflections") return cmd_inflections(o);
        if (name == "classify") return cmd_classify(o);
        if (name == "reconstruct") return cmd_reconstruct(o);
        if (name == "degenerate") return cmd_degenerate(o);
        return cmd_verify(o);
    } catch (const Error& e) {
        std::cout << error_json(to_string(e.kind()), e.what()).dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << error_json("internal_error", e.what()).dump() << "\n";
        return 1;
    }
}
