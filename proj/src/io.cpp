#include "altkron/io.hpp"

#include "altkron/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace altkron {

namespace {

const Json& member(const Json& j, const char* key) {
    if (!j.is_object()) throw InputError(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
    return *it;
}

std::size_t as_size(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw InputError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

const Json& as_array(const Json& j, const char* what, std::optional<std::size_t> len = std::nullopt) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be a list");
    if (len && j.size() != *len)
        throw InputError(std::string(what) + " must have " + std::to_string(*len) + " entries, got " +
                         std::to_string(j.size()));
    return j;
}

void check_format(const Json& j) {
    if (!j.is_object()) throw InputError("expected a JSON object");
    auto it = j.find("format");
    if (it != j.end() && (!it->is_number_integer() || it->get<int>() != kFormatVersion))
        throw InputError("unsupported format version");
}

}  // namespace

Json field_to_json(const Field& f) {
    if (f.is_rational()) return Json{{"kind", "rational"}};
    return Json{{"kind", "prime"}, {"p", f.modulus()}};
}

Field field_from_json(const Json& j) {
    const Json& kind = member(j, "kind");
    if (kind == "rational") return Field::rational();
    if (kind == "prime") {
        const Json& p = member(j, "p");
        if (!p.is_number_unsigned()) throw InputError("field modulus must be a positive integer");
        return Field::prime(p.get<std::uint64_t>());
    }
    throw InputError("field kind must be 'rational' or 'prime'");
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Field& f, const Json& j) {
    if (j.is_string()) return f.parse(j.get<std::string>());
    if (j.is_number_integer()) return f.parse(std::to_string(j.get<long long>()));
    throw InputError("scalars must be strings such as \"-2/5\"");
}

Json sparse_to_json(const Vec& v) {
    Json out = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.push_back(Json::array({i, scalar_to_json(v[i])}));
    return out;
}

Vec sparse_from_json(const Field& f, std::size_t n, const Json& j) {
    Vec out = zero_vec(f, n);
    for (const auto& e : as_array(j, "sparse vector")) {
        if (!e.is_array() || e.size() != 2) throw InputError("sparse entries must be [index, scalar] pairs");
        const std::size_t i = as_size(e[0], "sparse index");
        if (i >= n) throw InputError("sparse index " + std::to_string(i) + " out of range (dim " + std::to_string(n) + ")");
        out[i] += scalar_from_json(f, e[1]);
    }
    return out;
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
        out.push_back(row);
    }
    return out;
}

Matrix matrix_from_json(const Field& f, std::size_t rows, std::size_t cols, const Json& j) {
    Matrix m(f, rows, cols);
    as_array(j, "matrix", rows);
    for (std::size_t r = 0; r < rows; ++r) {
        as_array(j[r], "matrix row", cols);
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(f, j[r][c]);
    }
    return m;
}

Json algebra_to_json(const AlgebraTable& a) {
    Json out;
    out["format"] = kFormatVersion;
    out["field"] = field_to_json(a.field());
    out["dim"] = a.dim();
    out["basis"] = a.basis_names();
    if (a.has_unit()) out["unit"] = sparse_to_json(a.unit());
    Json table = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(sparse_to_json(to_dense(a.field(), a.dim(), a.product(i, j))));
        table.push_back(row);
    }
    out["table"] = table;
    return out;
}

AlgebraTable algebra_from_json(const Json& j) {
    check_format(j);
    const Field f = field_from_json(member(j, "field"));
    const std::size_t n = as_size(member(j, "dim"), "dim");
    if (n == 0) throw InputError("dim must be positive");
    std::vector<std::string> names;
    if (j.contains("basis")) {
        for (const auto& b : as_array(j["basis"], "basis", n)) {
            if (!b.is_string()) throw InputError("basis names must be strings");
            names.push_back(b.get<std::string>());
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) names.push_back("b" + std::to_string(i));
    }
    const Json& table = as_array(member(j, "table"), "table", n);
    std::vector<SparseVec> entries;
    for (std::size_t r = 0; r < n; ++r) {
        as_array(table[r], "table row", n);
        for (std::size_t c = 0; c < n; ++c) entries.push_back(to_sparse(sparse_from_json(f, n, table[r][c])));
    }
    std::optional<Element> unit;
    if (j.contains("unit") && !j["unit"].is_null()) unit = sparse_from_json(f, n, j["unit"]);
    return AlgebraTable(f, std::move(names), std::move(entries), std::move(unit));
}

Json units_to_json(const MatrixUnits& e) {
    Json out;
    out["format"] = kFormatVersion;
    out["E11"] = sparse_to_json(e(0, 0));
    out["E12"] = sparse_to_json(e(0, 1));
    out["E21"] = sparse_to_json(e(1, 0));
    out["E22"] = sparse_to_json(e(1, 1));
    return out;
}

MatrixUnits units_from_json(const Json& j, const AlgebraTable& a) {
    check_format(j);
    const Json& src = j.contains("units") ? j["units"] : j;
    MatrixUnits e;
    const char* keys[2][2] = {{"E11", "E12"}, {"E21", "E22"}};
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) e(p, q) = sparse_from_json(a.field(), a.dim(), member(src, keys[p][q]));
    return e;
}

Json spec_to_json(const KronSpec& spec) {
    Json out;
    out["format"] = kFormatVersion;
    out["B"] = algebra_to_json(spec.ring.table());
    Json action = Json::array();
    for (const auto& m : spec.module.action) action.push_back(matrix_to_json(m));
    out["V"] = Json{{"dim", spec.module.dim}, {"action", action}};
    Json form = Json::array();
    for (std::size_t i = 0; i < spec.form.n; ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < spec.form.n; ++k) row.push_back(sparse_to_json(spec.form.at(i, k)));
        form.push_back(row);
    }
    out["form"] = form;
    return out;
}

KronSpec spec_from_json(const Json& j) {
    check_format(j);
    CoeffRing ring(algebra_from_json(member(j, "B")));
    const Field& f = ring.field();
    const Json& v = member(j, "V");
    BimoduleV module{as_size(member(v, "dim"), "V.dim"), {}};
    const Json& action = as_array(member(v, "action"), "V.action", ring.dim());
    for (const auto& m : action) module.action.push_back(matrix_from_json(f, module.dim, module.dim, m));
    SkewForm form = SkewForm::zero(ring, module.dim);
    const Json& g = as_array(member(j, "form"), "form", module.dim);
    for (std::size_t r = 0; r < module.dim; ++r) {
        as_array(g[r], "form row", module.dim);
        for (std::size_t c = 0; c < module.dim; ++c) form.at(r, c) = sparse_from_json(f, ring.dim(), g[r][c]);
    }
    return KronSpec{std::move(ring), std::move(module), std::move(form)};
}

Json poly_to_json(const MultiPoly& p) {
    Json out = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        out.push_back(Json{{"exponents", it->first}, {"coeff", scalar_to_json(it->second)}});
    return out;
}

MultiPoly poly_from_json(const Json& j, const Field& f, const std::vector<std::string>& vars) {
    MultiPoly p(f, vars);
    if (j.is_string() || j.is_number_integer()) return MultiPoly::constant(f, vars, scalar_from_json(f, j));
    for (const auto& t : as_array(j, "polynomial")) {
        const Json& ex = as_array(member(t, "exponents"), "exponents", vars.size());
        Exponents e;
        for (const auto& x : ex) e.push_back(static_cast<std::uint32_t>(as_size(x, "exponent")));
        p.add_term(e, scalar_from_json(f, member(t, "coeff")));
    }
    return p;
}

Json family_to_json(const PolyFamily& fam) {
    Json out;
    out["format"] = kFormatVersion;
    out["n"] = fam.n;
    out["field"] = field_to_json(fam.zero.field());
    out["variables"] = fam.zero.variables();
    Json entries = Json::object();
    for (std::size_t i = 1; i <= fam.n; ++i)
        for (std::size_t j = i + 1; j <= fam.n; ++j)
            entries[std::to_string(i) + "," + std::to_string(j)] = poly_to_json(fam.stored(i, j));
    out["entries"] = entries;
    return out;
}

PolyFamily family_from_json(const Json& j) {
    check_format(j);
    const std::size_t n = as_size(member(j, "n"), "n");
    if (n < 2) throw InputError("a Plucker family needs n >= 2");
    const Field f = j.contains("field") ? field_from_json(j["field"]) : Field::rational();
    std::vector<std::string> vars;
    if (j.contains("variables"))
        for (const auto& v : as_array(j["variables"], "variables")) {
            if (!v.is_string()) throw InputError("variable names must be strings");
            vars.push_back(v.get<std::string>());
        }
    PolyFamily fam = make_family(n, MultiPoly(f, vars));
    const Json& entries = member(j, "entries");
    if (!entries.is_object()) throw InputError("entries must be an object keyed by \"i,j\"");
    for (auto it = entries.begin(); it != entries.end(); ++it) {
        std::size_t a = 0, b = 0;
        char comma = 0;
        std::istringstream key(it.key());
        if (!(key >> a >> comma >> b) || comma != ',' || !key.eof())
            throw InputError("entry key '" + it.key() + "' is not of the form \"i,j\"");
        if (a < 1 || b > n || a >= b) throw InputError("entry key '" + it.key() + "' needs 1 <= i < j <= n");
        fam.stored(a, b) = poly_from_json(it.value(), f, vars);
    }
    return fam;
}

Json check_to_json(const Check& c) {
    Json out{{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.empty()) out["witness"] = c.witness;
    if (!c.detail.empty()) out["detail"] = c.detail;
    if (c.seed) out["seed"] = *c.seed;
    return out;
}

Json checks_to_json(const CheckList& r) {
    Json out = Json::array();
    for (const auto& c : r.checks()) out.push_back(check_to_json(c));
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json_file(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace altkron
