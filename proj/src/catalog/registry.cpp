#include "ncgauge/catalog/registry.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ncgauge/bundle/gauge.hpp"
#include "ncgauge/catalog/examples.hpp"
#include "ncgauge/foundation/errors.hpp"
#include "ncgauge/hopf/presentation.hpp"

namespace ncg {

namespace {

// Largest order accepted for parametrised names; the structure tensors grow like n⁶.
constexpr int kMaxOrder = 12;

int parse_order(const std::string& name, const std::string& arg, int lo) {
    int n = 0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
    if (ec != std::errc() || ptr != arg.data() + arg.size() || n < lo || n > kMaxOrder)
        throw ParseError(name + ": expected an integer order in [" + std::to_string(lo) + ", " +
                         std::to_string(kMaxOrder) + "]");
    return n;
}

Input regular_input(std::string name, std::string description, const HopfAlgebra& h) {
    Input in;
    in.name = std::move(name);
    in.description = std::move(description);
    in.hopf = h;
    in.bundle = regular_comodule_algebra(h);
    in.trivialisation = Matrix::identity(h.dim());
    if (h.r_form) {
        in.category = braided_category(h);
        in.braided = trivial_braided_group(h);
    }
    return in;
}

Input bosonisation_input(std::string name, int n) {
    Input in;
    in.name = std::move(name);
    in.description = "bosonisation of the braided line of order " + std::to_string(n) + " (Taft type, dim " +
                     std::to_string(n * n) + ")";
    in.category = braided_line_category(n);
    in.braided = braided_line(n);
    in.bosonisation = bosonise(*in.category, *in.braided);
    in.line_order = n;
    in.hopf = in.bosonisation->hopf;
    const QuantumBosonisationBundle q = bosonisation_as_quantum_bundle(*in.bosonisation);
    in.bundle = q.bundle.total;
    in.trivialisation = q.trivialisation.phi;
    return in;
}

Input cocycle_input(std::string name, std::string description, const CocycleData& data) {
    Input in;
    in.name = std::move(name);
    in.description = std::move(description);
    in.hopf = data.h;
    in.cocycle = data;
    const CrossProduct cp = cocycle_cross_product(data, in.name);
    in.bundle = cp.bundle.total;
    in.trivialisation = cp.trivialisation.phi;
    return in;
}

Input bundle_input(std::string name, std::string description, const ComoduleAlgebra& p) {
    Input in;
    in.name = std::move(name);
    in.description = std::move(description);
    in.hopf = p.host;
    in.bundle = p;
    return in;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError(path + ": cannot open file");
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

const Json& member(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field \"" + key + "\"");
    return j.at(key);
}

// A Hopf algebra given inline or as a catalog name.
HopfAlgebra hopf_ref(const Json& j, const std::string& where) {
    if (j.is_string()) return resolve(j.get<std::string>()).hopf;
    return hopf_from_json(j, where);
}

int field_of(const Json& j) {
    if (j.is_object() && j.contains("field") && j["field"].is_object() && j["field"].contains("cyclotomic") &&
        j["field"]["cyclotomic"].is_number_integer())
        return j["field"]["cyclotomic"].get<int>();
    return 1;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, int conductor, const std::string& where) {
    // Column-major on the wire: entry [c][r] is the e_r coefficient of the image of e_c.
    if (!j.is_array() || j.size() != cols) throw ParseError(where + ": expected " + std::to_string(cols) + " columns");
    Matrix m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        const std::string wc = where + "/" + std::to_string(c);
        if (!j[c].is_array() || j[c].size() != rows)
            throw ParseError(wc + ": expected an array of length " + std::to_string(rows));
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = scalar_from_json(j[c][r], conductor, wc + "/" + std::to_string(r));
    }
    return m;
}

}  // namespace

Input resolve(const std::string& name) {
    const auto colon = name.find(':');
    const std::string head = name.substr(0, colon);
    const std::string arg = colon == std::string::npos ? std::string() : name.substr(colon + 1);
    const bool has_arg = colon != std::string::npos;

    if (!has_arg) {
        if (name == "kZ2") return regular_input(name, "group algebra of Z2 as a bundle over a point", group_algebra(2));
        if (name == "sweedler")
            return regular_input(name, "four-dimensional Sweedler algebra as a bundle over a point", sweedler());
        if (name == "fnZ4-over-fnZ2")
            return bundle_input(name, "functions on Z4 over functions on Z2 (translation by 2)", fn_z4_over_fn_z2());
        if (name == "crossprod-action")
            return cocycle_input(name, "k(Z2) with kZ2 acting by projection onto graded parts", crossprod_action());
        if (name == "m3-graded") return bundle_input(name, "M3 graded over Z2 by row degrees (0,0,1)", m3_graded());
        if (name == "fnZ2-sum-not-free")
            return bundle_input(name, "k(Z2)+k(Z2) with a swap on one summand only", fn_z2_sum_not_free());
    } else if (head == "kZn") {
        const int n = parse_order(name, arg, 1);
        return regular_input(name, "group algebra of Z" + arg + " as a bundle over a point", group_algebra(n));
    } else if (head == "taft" || head == "bosonisation") {
        return bosonisation_input(name, parse_order(name, arg, 2));
    } else if (head == "braided-line") {
        const int n = parse_order(name, arg, 2);
        Input in;
        in.name = name;
        in.description = "k[x]/x^" + arg + " in the kZ" + arg + " category, deg x = g";
        in.category = braided_line_category(n);
        in.braided = braided_line(n);
        in.hopf = in.category->h;
        in.line_order = n;
        return in;
    } else if (head == "crossprod-mu") {
        Rational mu;
        try {
            mu = Rational::parse(arg);
        } catch (const Error&) {
            throw ParseError(name + ": expected a rational parameter");
        }
        if (mu.is_zero()) throw ParseError(name + ": the cocycle value must be nonzero");
        return cocycle_input(name, "k over kZ2 with cocycle c(g,g) = " + mu.str(), crossprod_mu(Scalar(mu)));
    }
    throw ParseError("unknown input '" + name + "' (see `ncgauge catalog`)");
}

Input input_from_json(const Json& j, const std::string& source) {
    if (!j.is_object()) throw ParseError(source + ": /: expected an object");
    const std::string kind = j.value("kind", std::string("hopf"));
    const std::string name = j.value("name", source);
    const int n = field_of(j);
    if (kind == "hopf") {
        Input in;
        in.name = name;
        in.description = "Hopf algebra read from " + source;
        in.hopf = hopf_from_json(j, "");
        return in;
    }
    if (kind == "bundle") {
        Input in;
        in.name = name;
        in.description = "bundle read from " + source;
        in.hopf = hopf_ref(member(j, "hopf", "/"), "/hopf");
        const Json& aj = member(j, "algebra", "/");
        const Algebra p = algebra_from_json(aj, std::max(n, field_of(aj)), "/algebra");
        const Comodule rho = comodule_from_json(j, in.hopf, p.space(), n, "");
        in.bundle = ComoduleAlgebra{p, in.hopf, rho};
        if (j.contains("trivialisation"))
            in.trivialisation = matrix_from_json(j["trivialisation"], p.dim(), in.hopf.dim(), n, "/trivialisation");
        return in;
    }
    if (kind == "braided-group") {
        Input in;
        in.name = name;
        in.description = "braided group read from " + source;
        in.hopf = hopf_ref(member(j, "category", "/"), "/category");
        if (!in.hopf.r_form) throw ParseError(source + ": /category: the host needs a \"dqt\" form");
        try {
            in.category = braided_category(in.hopf, *in.hopf.r_form);
        } catch (const InvariantFailure& e) {
            throw AxiomPrecheckError(source + ": /category: " + e.what());
        }
        const Algebra a = algebra_from_json(j, n, "");
        const std::size_t d = a.dim();
        BraidedGroup b;
        b.name = name;
        b.algebra = a;
        b.coalgebra = Coalgebra(a.space(), matrix_from_json(member(j, "comult", "/"), d * d, d, n, "/comult"),
                                [&] {
                                    const Json& cj = member(j, "counit", "/");
                                    if (!cj.is_array() || cj.size() != d)
                                        throw ParseError("/counit: expected an array of length " + std::to_string(d));
                                    Vec v(d);
                                    for (std::size_t i = 0; i < d; ++i)
                                        v[i] = scalar_from_json(cj[i], n, "/counit/" + std::to_string(i));
                                    return v;
                                }());
        b.antipode = matrix_from_json(member(j, "antipode", "/"), d, d, n, "/antipode");
        b.coaction = comodule_from_json(j, in.hopf, a.space(), n, "");
        in.braided = std::move(b);
        return in;
    }
    throw ParseError(source + ": /kind: expected \"hopf\", \"bundle\" or \"braided-group\"");
}

Input load_input(const std::string& name_or_path) {
    if (!std::filesystem::is_regular_file(name_or_path)) return resolve(name_or_path);
    const Json j = parse_json_text(read_file(name_or_path), name_or_path);
    try {
        return input_from_json(j, name_or_path);
    } catch (const ParseError& e) {
        const std::string what = e.what();
        if (what.rfind(name_or_path, 0) == 0) throw;
        throw ParseError(name_or_path + ": " + what);
    } catch (const Json::exception& e) {
        throw ParseError(name_or_path + ": " + e.what());
    }
}

std::vector<CatalogEntry> catalog() {
    struct Representative {
        std::string pattern, instance;
    };
    const std::vector<Representative> representatives{
        {"kZ2", "kZ2"},
        {"kZn:n", "kZn:3"},
        {"sweedler", "sweedler"},
        {"taft:n", "taft:2"},
        {"bosonisation:n", "bosonisation:3"},
        {"braided-line:n", "braided-line:3"},
        {"fnZ4-over-fnZ2", "fnZ4-over-fnZ2"},
        {"crossprod-mu:μ", "crossprod-mu:2"},
        {"crossprod-action", "crossprod-action"},
        {"m3-graded", "m3-graded"},
        {"fnZ2-sum-not-free", "fnZ2-sum-not-free"}};
    std::vector<CatalogEntry> out;
    for (const Representative& s : representatives) {
        CatalogEntry e{s.pattern, s.instance, {}, {}};
        const Input in = resolve(s.instance);
        e.description = in.description;
        if (check_hopf_axioms(in.hopf).passed()) e.flags.push_back("hopf");
        if (in.category) e.flags.push_back("dqt");
        if (in.braided && in.braided->dim() > 1) e.flags.push_back("braided");
        if (in.bundle) {
            try {
                const PrincipalBundle b = build_bundle(*in.bundle, in.name);
                if (in.trivialisation && check_trivialisation(b, *in.trivialisation).passed()) {
                    e.flags.push_back("trivializable");
                } else {
                    const TrivialisationSearch t = find_trivialisation(b);
                    e.flags.push_back(t.status == Status::Pass   ? "trivializable"
                                      : t.status == Status::Fail ? "nontrivializable"
                                                                 : "trivialisation-undecided");
                }
            } catch (const NotFree&) {
                e.flags.push_back("not-free");
            } catch (const NotGalois&) {
                e.flags.push_back("not-galois");
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace ncg
