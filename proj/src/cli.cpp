#include "altkron/cli.hpp"

#include "altkron/constructions.hpp"
#include "altkron/coordinatizer.hpp"
#include "altkron/errors.hpp"
#include "altkron/fixtures.hpp"
#include "altkron/identities.hpp"
#include "altkron/io.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

namespace altkron {

namespace {

struct Report {
    Json command = Json::array();
    Json inputs = Json::array();
    std::optional<std::uint64_t> seed;
    CheckList checks;
    Json result = Json::object();
    Json timings = Json::object();
    bool timing = false;

    bool pass() const { return checks.pass(); }

    Json to_json() const {
        Json out;
        out["format"] = kFormatVersion;
        out["command"] = command;
        out["inputs"] = inputs;
        if (seed) out["seed"] = *seed;
        out["checks"] = checks_to_json(checks);
        out["pass"] = pass();
        out["result"] = result;
        if (timing) out["timings_ms"] = timings;
        return out;
    }

    /// Runs `f`, recording its wall time under `name` when timing is on.
    template <class F>
    auto timed(const std::string& name, F&& f) {
        const auto t0 = std::chrono::steady_clock::now();
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            if (timing) timings[name] = elapsed_ms(t0);
        } else {
            auto r = f();
            if (timing) timings[name] = elapsed_ms(t0);
            return r;
        }
    }

    static double elapsed_ms(std::chrono::steady_clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
};

Field parse_field(const std::string& text) {
    if (text == "Q" || text == "q" || text == "rational") return Field::rational();
    std::string digits = text;
    if (!digits.empty() && (digits[0] == 'F' || digits[0] == 'p')) digits.erase(0, 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("unknown field '" + text + "' (expected Q or a prime)");
    return Field::prime(std::stoull(digits));
}

struct LoadedAlgebra {
    AlgebraTable table;
    std::optional<MatrixUnits> units;
};

Json file_input(const std::string& role, const std::string& path, const std::string& bytes) {
    return Json{{"role", role}, {"path", path}, {"fnv1a64", fnv1a64_hex(bytes)}};
}

Json parse_json_text(const std::string& path, const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::optional<LoadedAlgebra> builtin_algebra(const std::string& name, const Field& f) {
    if (name == "rationals" || name == "ground") return LoadedAlgebra{ground_algebra(f), std::nullopt};
    if (name == "dual") return LoadedAlgebra{truncated_poly(f, 2), std::nullopt};
    if (name.rfind("truncated:", 0) == 0) {
        const std::string k = name.substr(10);
        if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos || std::stoul(k) == 0)
            throw InputError("truncated:<k> needs a positive integer k");
        return LoadedAlgebra{truncated_poly(f, std::stoul(k)), std::nullopt};
    }
    if (name == "grassmann2") return LoadedAlgebra{grassmann2(f), std::nullopt};
    if (name == "upper2") return LoadedAlgebra{upper_triangular2(f), std::nullopt};
    if (name == "m2") return LoadedAlgebra{matrix_algebra2(f), standard_units(f)};
    if (name == "octonions") {
        Construction c = octonion(CoeffRing(ground_algebra(f)));
        return LoadedAlgebra{std::move(c.table), std::move(c.units)};
    }
    return std::nullopt;
}

/// A builtin name or a path to an algebra file.
LoadedAlgebra load_algebra(const std::string& arg, const Field& f, const std::string& role, Report& rep) {
    if (auto b = builtin_algebra(arg, f)) {
        rep.inputs.push_back(Json{{"role", role}, {"builtin", arg}, {"field", field_to_json(f)}});
        return std::move(*b);
    }
    const std::string text = read_text_file(arg);
    rep.inputs.push_back(file_input(role, arg, text));
    return LoadedAlgebra{algebra_from_json(parse_json_text(arg, text)), std::nullopt};
}

MatrixUnits load_units(const std::string& arg, const LoadedAlgebra& a, Report& rep) {
    if (arg == "standard") {
        if (!a.units) throw InputError("--units standard is only available for the m2 and octonions builtins");
        rep.inputs.push_back(Json{{"role", "units"}, {"builtin", "standard"}});
        return *a.units;
    }
    const std::string text = read_text_file(arg);
    rep.inputs.push_back(file_input("units", arg, text));
    return units_from_json(parse_json_text(arg, text), a.table);
}

KronSpec load_spec(const std::string& path, Report& rep) {
    const std::string text = read_text_file(path);
    rep.inputs.push_back(file_input("spec", path, text));
    return spec_from_json(parse_json_text(path, text));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

Vec parse_coords(const Field& f, std::size_t n, const std::string& text, const std::string& what) {
    auto parts = split(text, ',');
    if (parts.size() != n)
        throw InputError(what + " '" + text + "' needs " + std::to_string(n) + " comma-separated coordinates");
    Vec v;
    for (const auto& p : parts) v.push_back(f.parse(p));
    return v;
}

/// A basis name, dense coordinates "c0,c1,...", or a scalar multiple of 1.
Element parse_element(const AlgebraTable& a, const std::string& text, const std::string& what) {
    const auto& names = a.basis_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == text) return unit_vec(a.field(), a.dim(), i);
    if (text.find(',') != std::string::npos || a.dim() == 1) return parse_coords(a.field(), a.dim(), text, what);
    if (!a.has_unit()) throw InputError(what + " '" + text + "' is not a basis name and the algebra has no unit");
    return scale(a.field().parse(text), a.unit());
}

Json dense_to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(scalar_to_json(x));
    return out;
}

std::filesystem::path prepare_out(const std::string& dir) {
    std::filesystem::path p(dir);
    std::error_code ec;
    std::filesystem::create_directories(p, ec);
    if (ec) throw InputError("cannot create output directory '" + dir + "': " + ec.message());
    return p;
}

void write_output(Report& rep, const std::filesystem::path& dir, const std::string& name, const Json& j) {
    const auto path = dir / name;
    write_json_file(path.string(), j);
    rep.result["files"].push_back(path.string());
}

IdentityMode parse_mode(const std::string& text, const std::optional<std::uint64_t>& seed, Report& rep) {
    if (text == "basis") return IdentityMode::basis();
    auto parts = split(text, ':');
    if (parts.empty() || parts[0] != "random" || parts.size() < 2 || parts.size() > 3)
        throw InputError("--mode must be basis, random:<n>:<seed> or random:<n> with --seed");
    std::size_t n = 0;
    std::uint64_t s = 0;
    try {
        n = std::stoull(parts[1]);
        if (parts.size() == 3) {
            s = std::stoull(parts[2]);
        } else if (seed) {
            s = *seed;
        } else {
            throw InputError("random mode needs an explicit seed (random:<n>:<seed> or --seed)");
        }
    } catch (const std::logic_error&) {
        throw InputError("malformed --mode '" + text + "'");
    }
    rep.seed = s;
    return IdentityMode::random(n, s);
}

Json provenance(const std::string& kind, const Report& rep) {
    Json p{{"construction", kind}};
    for (const auto& in : rep.inputs) p["inputs"].push_back(in);
    return p;
}

Json algebra_with_provenance(const AlgebraTable& a, Json prov) {
    Json j = algebra_to_json(a);
    j["provenance"] = std::move(prov);
    return j;
}

Json iso_to_json(const Matrix& m) {
    return Json{{"format", kFormatVersion}, {"rows", m.rows()}, {"cols", m.cols()}, {"matrix", matrix_to_json(m)}};
}

BimoduleActions load_bimodule(const std::string& arg, const AlgebraTable& a, Report& rep) {
    if (arg == "cay") {
        if (a.dim() != 4) throw InputError("the Cayley bimodule needs the m2 base");
        return cay_bimodule(a.field());
    }
    if (arg == "reg") return regular_bimodule(a);
    const std::string text = read_text_file(arg);
    rep.inputs.push_back(file_input("bimodule", arg, text));
    const Json j = parse_json_text(arg, text);
    if (!j.contains("dim") || !j.contains("left") || !j.contains("right"))
        throw InputError("bimodule file needs dim, left and right");
    BimoduleActions v;
    v.dim = j["dim"].get<std::size_t>();
    for (const char* side : {"left", "right"}) {
        const Json& ms = j[side];
        if (!ms.is_array() || ms.size() != a.dim())
            throw InputError(std::string("bimodule '") + side + "' needs one matrix per basis element");
        for (const auto& m : ms)
            (side[0] == 'l' ? v.left : v.right).push_back(matrix_from_json(a.field(), v.dim, v.dim, m));
    }
    return v;
}

// ---- commands ----

struct CheckArgs {
    std::string algebra;
    std::vector<std::string> identities;
    std::string mode = "basis";
};

void cmd_check(const CheckArgs& args, const Field& f, const std::optional<std::uint64_t>& seed, Report& rep) {
    LoadedAlgebra a = load_algebra(args.algebra, f, "algebra", rep);
    const IdentityMode mode = parse_mode(args.mode, seed, rep);
    std::vector<Identity> ids;
    for (const auto& name : args.identities) {
        if (name == "all") {
            auto all = all_identities();
            ids.insert(ids.end(), all.begin(), all.end());
        } else {
            try {
                ids.push_back(parse_identity(name));
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
        }
    }
    rep.checks.add(rep.timed("alternative", [&] { return check_alternative(a.table); }));
    for (Identity id : ids) {
        const std::string name = identity_name(id);
        rep.checks.add(rep.timed(name, [&] { return check_identity(a.table, id, mode); }));
    }
    rep.result["dim"] = a.table.dim();
    rep.result["unital"] = a.table.has_unit();
}

struct ConstructArgs {
    std::string kind;
    std::string base = "rationals";
    std::string alpha;
    std::string v2 = "1";
    std::string bimodule;
    std::string a, b, c;
    std::string x, y;
};

void emit_construction(Report& rep, const std::filesystem::path& dir, const std::string& kind, const Construction& c,
                       Json prov) {
    rep.checks.append(c.report);
    rep.checks.add(rep.timed("alternative", [&] { return check_alternative(c.table); }));
    rep.result["dim"] = c.table.dim();
    write_output(rep, dir, kind + ".algebra.json", algebra_with_provenance(c.table, std::move(prov)));
    write_output(rep, dir, kind + ".units.json", units_to_json(c.units));
    if (c.spec) write_output(rep, dir, kind + ".spec.json", spec_to_json(*c.spec));
}

void cmd_construct(const ConstructArgs& args, const Field& f, const std::optional<std::uint64_t>& seed,
                   const std::filesystem::path& dir, Report& rep) {
    const std::string& kind = args.kind;
    LoadedAlgebra base = load_algebra(args.base, f, "base", rep);
    Json prov = provenance(kind, rep);
    if (kind == "octonion") {
        const Scalar v2 = base.table.field().parse(args.v2);
        prov["v2"] = scalar_to_json(v2);
        CoeffRing ring(std::move(base.table));
        Construction c = rep.timed("construct", [&] { return octonion(ring, v2); });
        emit_construction(rep, dir, kind, c, prov);
    } else if (kind == "cd" || kind == "ncd") {
        if (args.alpha.empty()) throw InputError(kind + " needs --alpha");
        const Element alpha = parse_element(base.table, args.alpha, "--alpha");
        prov["alpha"] = dense_to_json(alpha);
        CoeffRing ring(std::move(base.table));
        if (kind == "cd") {
            Construction c = rep.timed("construct", [&] { return cd(ring, alpha); });
            emit_construction(rep, dir, kind, c, prov);
        } else {
            // The section seed only perturbs the independence cross-check; it
            // is recorded in the provenance block either way.
            const std::uint64_t s = seed.value_or(1);
            rep.seed = s;
            prov["section_seed"] = s;
            Construction c = rep.timed("construct", [&] { return ncd(ring, alpha, s); });
            emit_construction(rep, dir, kind, c, prov);
        }
    } else if (kind == "nullext") {
        if (args.bimodule.empty()) throw InputError("nullext needs --bimodule cay|reg|<file>");
        BimoduleActions v = load_bimodule(args.bimodule, base.table, rep);
        prov = provenance(kind, rep);
        prov["bimodule"] = args.bimodule;
        NullExtension ext = rep.timed("construct", [&] { return split_null_extension(base.table, v); });
        rep.checks.add(ext.alternative);
        rep.result["dim"] = ext.table.dim();
        write_output(rep, dir, kind + ".algebra.json", algebra_with_provenance(ext.table, prov));
        if (base.units) {
            // The units of an m2 base sit in the first block of the extension.
            MatrixUnits u;
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q) {
                    Element e = ext.table.zero();
                    const Element& src = (*base.units)(p, q);
                    for (std::size_t i = 0; i < src.size(); ++i) e[i] = src[i];
                    u(p, q) = e;
                }
            write_output(rep, dir, kind + ".units.json", units_to_json(u));
        }
    } else if (kind == "threegen") {
        if (args.a.empty() || args.b.empty() || args.c.empty()) throw InputError("threegen needs --a, --b and --c");
        CoeffRing ring(std::move(base.table));
        const Element ea = parse_element(ring.table(), args.a, "--a");
        const Element eb = parse_element(ring.table(), args.b, "--b");
        const Element ec = parse_element(ring.table(), args.c, "--c");
        prov["a"] = dense_to_json(ea);
        prov["b"] = dense_to_json(eb);
        prov["c"] = dense_to_json(ec);
        KronSpec spec = rep.timed("construct", [&] { return three_generator_module(ring, ea, eb, ec); });
        rep.checks.append(validate_form(spec));
        BuiltAlgebra built = build_algebra(spec, true);
        rep.checks.add(rep.timed("alternative", [&] { return check_alternative(built.table); }));
        rep.result["dim"] = built.table.dim();
        rep.result["module_dim"] = spec.module.dim;
        write_output(rep, dir, kind + ".spec.json", spec_to_json(spec));
        write_output(rep, dir, kind + ".algebra.json", algebra_with_provenance(built.table, prov));
        write_output(rep, dir, kind + ".units.json", units_to_json(built.units));
    } else {
        throw InputError("unknown construction '" + kind + "'");
    }
}

void cmd_build(const std::string& spec_path, bool force, const std::filesystem::path& dir, Report& rep) {
    KronSpec spec = load_spec(spec_path, rep);
    CheckList v = rep.timed("validate_form", [&] { return validate_form(spec); });
    rep.checks.append(v);
    rep.result["forced"] = force;
    if (!v.pass() && !force) {
        rep.result["built"] = false;
        return;
    }
    BuiltAlgebra built = rep.timed("build", [&] { return build_algebra(spec, true); });
    rep.checks.add(rep.timed("alternative", [&] { return check_alternative(built.table); }));
    rep.result["built"] = true;
    rep.result["dim"] = built.table.dim();
    Json prov{{"construction", "build"}, {"inputs", rep.inputs}, {"forced", force}};
    write_output(rep, dir, "built.algebra.json", algebra_with_provenance(built.table, prov));
    write_output(rep, dir, "built.units.json", units_to_json(built.units));
}

void cmd_coordinatize(const std::string& algebra, const std::string& units, const Field& f,
                      const std::filesystem::path& dir, Report& rep) {
    LoadedAlgebra a = load_algebra(algebra, f, "algebra", rep);
    MatrixUnits e = load_units(units, a, rep);
    CoordinatizationResult r = rep.timed("coordinatize", [&] { return coordinatize(a.table, e); });
    rep.checks.append(r.report);
    Json dims{{"A", a.table.dim()}};
    if (r.za) dims["Z_a"] = r.za->dim();
    if (r.spec) dims["V"] = r.spec->module.dim;
    rep.result["dims"] = dims;
    if (!r.failed_stage.empty()) {
        rep.result["failed_stage"] = r.failed_stage;
        rep.result["failure"] = r.failure;
    }
    if (r.spec) {
        Json gram = Json::array();
        for (std::size_t i = 0; i < r.spec->form.n; ++i) {
            Json row = Json::array();
            for (std::size_t j = 0; j < r.spec->form.n; ++j) row.push_back(dense_to_json(r.spec->form.at(i, j)));
            gram.push_back(row);
        }
        rep.result["gram"] = gram;
        write_output(rep, dir, "recovered.spec.json", spec_to_json(*r.spec));
    }
    if (r.iso) {
        rep.result["iso"] = matrix_to_json(*r.iso);
        write_output(rep, dir, "iso.json", iso_to_json(*r.iso));
    }
    if (r.rebuilt) write_output(rep, dir, "rebuilt.algebra.json", algebra_to_json(*r.rebuilt));
}

void cmd_plucker_grassmann(std::size_t n, const Field& f, const std::filesystem::path& dir, Report& rep) {
    PolyFamily fam = grassmann_alphas(n, f);
    rep.checks.add(rep.timed("plucker", [&] { return check_plucker(fam); }));
    rep.checks.add(rep.timed("pivot_relation", [&] { return check_pivot_relation(fam); }));
    rep.result["n"] = n;
    rep.result["quadruples"] = n * (n - 1) * (n - 2) * (n - 3) / 24;
    write_output(rep, dir, "grassmann_" + std::to_string(n) + ".family.json", family_to_json(fam));
}

void cmd_plucker_check(const std::string& path, const std::string& convention, Report& rep) {
    PluckerConvention conv;
    if (convention == "determinant") {
        conv = PluckerConvention::determinant;
    } else if (convention == "printed") {
        conv = PluckerConvention::printed;
    } else {
        throw InputError("--convention must be determinant or printed");
    }
    const std::string text = read_text_file(path);
    rep.inputs.push_back(file_input("family", path, text));
    PolyFamily fam = family_from_json(parse_json_text(path, text));
    rep.checks.add(rep.timed("plucker", [&] { return check_plucker(fam, conv); }));
    rep.result["n"] = fam.n;
    rep.result["convention"] = convention;
}

void cmd_plucker_independence(std::size_t n, std::size_t trials, const std::optional<std::uint64_t>& seed,
                              Report& rep) {
    if (!seed) throw InputError("plucker independence needs --seed");
    rep.seed = *seed;
    IndependenceReport r = rep.timed("independence", [&] { return independence_check(n, trials, *seed); });
    Check c{"independence", r.certified, {}, {}, *seed};
    if (!r.certified)
        c.detail = "maximal Jacobian rank " + std::to_string(r.max_rank) + " < " + std::to_string(r.expected_rank);
    rep.checks.add(c);
    rep.result["n"] = n;
    rep.result["expected_rank"] = r.expected_rank;
    rep.result["max_rank"] = r.max_rank;
    rep.result["trials"] = r.trials;
    rep.result["discarded"] = r.discarded;
    if (!r.point.empty()) rep.result["point"] = dense_to_json(r.point);
}

void cmd_criterion(const std::string& spec_path, const std::string& x, const std::string& y, Report& rep) {
    KronSpec spec = load_spec(spec_path, rep);
    std::optional<std::pair<Vec, Vec>> witness;
    if (!x.empty() || !y.empty()) {
        if (x.empty() || y.empty()) throw InputError("a witness needs both --x and --y");
        const std::size_t n = spec.module.dim;
        witness = std::pair{parse_coords(spec.ring.field(), n, x, "--x"), parse_coords(spec.ring.field(), n, y, "--y")};
    }
    OctonionVerdict v = rep.timed("criterion", [&] { return octonion_criterion(spec, witness); });
    Check c{"octonion_criterion", v.kind == OctonionVerdict::Kind::yes, {}, v.reason, std::nullopt};
    rep.checks.add(c);
    rep.result["verdict"] = verdict_name(v.kind);
    if (v.witness) rep.result["witness"] = Json::array({dense_to_json(v.witness->first), dense_to_json(v.witness->second)});
}

Json error_json(const Report& rep, const std::string& kind, const std::string& message) {
    return Json{{"format", kFormatVersion},
                {"command", rep.command},
                {"inputs", rep.inputs},
                {"pass", false},
                {"error", Json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact coordinatization of alternative algebras containing 2x2 matrices", "altkron"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string field_text = "Q";
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    bool timing = false;
    app.add_option("--field", field_text, "Ground field for builtin algebras: Q or a prime");
    app.add_option("--out", out_dir, "Directory for generated files");
    app.add_option("--seed", seed, "Seed for randomized modes");
    app.add_flag("--timing", timing, "Add wall-clock timings to the report");

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Check alternativity and identities of an algebra");
    check->add_option("algebra", check_args.algebra, "Algebra file or builtin name")->required();
    check->add_option("--identity", check_args.identities, "Identity name, short label or 'all'");
    check->add_option("--mode", check_args.mode, "basis | random:<n>:<seed>");

    ConstructArgs cons;
    auto* construct = app.add_subcommand("construct", "Run a doubling or extension construction");
    construct->add_option("kind", cons.kind, "octonion | cd | ncd | nullext | threegen")->required();
    construct->add_option("--base", cons.base, "Base algebra file or builtin name");
    construct->add_option("--alpha", cons.alpha, "Doubling parameter");
    construct->add_option("--v2", cons.v2, "Scalar v^2 for octonion");
    construct->add_option("--bimodule", cons.bimodule, "cay | reg | bimodule file");
    construct->add_option("--a", cons.a, "First three-generator relation coefficient");
    construct->add_option("--b", cons.b, "Second three-generator relation coefficient");
    construct->add_option("--c", cons.c, "Third three-generator relation coefficient");

    std::string spec_path;
    bool force = false;
    auto* build = app.add_subcommand("build", "Build M2(B) + V^2 from a spec file");
    build->add_option("spec", spec_path, "Spec file")->required();
    build->add_flag("--force", force, "Build even when the form is invalid");

    std::string coord_algebra, coord_units;
    auto* coord = app.add_subcommand("coordinatize", "Recover coordinates from an algebra and matrix units");
    coord->add_option("algebra", coord_algebra, "Algebra file or builtin name")->required();
    coord->add_option("--units", coord_units, "Matrix units file, or 'standard' for builtins")->required();

    auto* plucker = app.add_subcommand("plucker", "Plucker relation tools");
    plucker->require_subcommand(1);
    std::size_t pl_n = 0, pl_trials = 5;
    std::string family_path, convention = "determinant";
    auto* grass = plucker->add_subcommand("grassmann", "Check the 2x2 minors family");
    grass->add_option("--n", pl_n, "Number of columns")->required();
    auto* pcheck = plucker->add_subcommand("check", "Check a family file");
    pcheck->add_option("family", family_path, "Family file")->required();
    pcheck->add_option("--convention", convention, "determinant | printed");
    auto* indep = plucker->add_subcommand("independence", "Jacobian rank certificate");
    indep->add_option("--n", pl_n, "Number of columns")->required();
    indep->add_option("--trials", pl_trials, "Random evaluation points");

    std::string crit_spec, crit_x, crit_y;
    auto* crit = app.add_subcommand("criterion", "Decide whether the form takes the value 1");
    crit->add_option("spec", crit_spec, "Spec file")->required();
    crit->add_option("--x", crit_x, "Witness x, comma-separated F-coordinates in V");
    crit->add_option("--y", crit_y, "Witness y, comma-separated F-coordinates in V");

    Report rep;
    for (const auto& a : args) rep.command.push_back(a);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    rep.timing = timing;

    try {
        const Field f = parse_field(field_text);
        if (check->parsed()) {
            cmd_check(check_args, f, seed, rep);
        } else if (construct->parsed()) {
            cmd_construct(cons, f, seed, prepare_out(out_dir), rep);
        } else if (build->parsed()) {
            cmd_build(spec_path, force, prepare_out(out_dir), rep);
        } else if (coord->parsed()) {
            cmd_coordinatize(coord_algebra, coord_units, f, prepare_out(out_dir), rep);
        } else if (grass->parsed()) {
            cmd_plucker_grassmann(pl_n, f, prepare_out(out_dir), rep);
        } else if (pcheck->parsed()) {
            cmd_plucker_check(family_path, convention, rep);
        } else if (indep->parsed()) {
            cmd_plucker_independence(pl_n, pl_trials, seed, rep);
        } else if (crit->parsed()) {
            cmd_criterion(crit_spec, crit_x, crit_y, rep);
        }
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        out << error_json(rep, "input", e.what()).dump(2) << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "input error: " << e.what() << "\n";
        out << error_json(rep, "input", e.what()).dump(2) << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        out << error_json(rep, "input", e.what()).dump(2) << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << "\n";
        out << error_json(rep, "precondition", e.what()).dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        out << error_json(rep, "failure", e.what()).dump(2) << "\n";
        return 1;
    }
    out << rep.to_json().dump(2) << "\n";
    return rep.pass() ? 0 : 1;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

}  // namespace altkron
