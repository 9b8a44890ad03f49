#include "ncgauge/catalog/json_io.hpp"

#include <numeric>

#include "ncgauge/foundation/errors.hpp"

namespace ncg {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw ParseError((where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) bad(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(where, "missing field \"" + key + "\"");
    return *it;
}

Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const Error& e) {
            bad(where, e.what());
        }
    }
    bad(where, "expected an integer or a \"p/q\" string");
}

// Falls back to a decimal string beyond 64 bits.
Json integer_json(const std::string& digits) {
    try {
        return Json(std::stoll(digits));
    } catch (const std::out_of_range&) {
        return Json(digits);
    }
}

std::size_t dim_of(const Json& j, const std::string& where) {
    const Json& d = field(j, "dim", where);
    if (!d.is_number_integer() || d.get<std::int64_t>() <= 0) bad(where + "/dim", "expected a positive integer");
    return d.get<std::size_t>();
}

const Json& array_of(const Json& j, std::size_t n, const std::string& where) {
    if (!j.is_array() || j.size() != n) bad(where, "expected an array of length " + std::to_string(n));
    return j;
}

Vec vec_from_json(const Json& j, std::size_t n, int conductor, const std::string& where) {
    array_of(j, n, where);
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = scalar_from_json(j[i], conductor, where + "/" + std::to_string(i));
    return v;
}

// t[i][j][k] with the outer index the source basis element.
Matrix tensor3_from_json(const Json& j, std::size_t n0, std::size_t n1, std::size_t n2, int conductor,
                         const std::string& where) {
    array_of(j, n0, where);
    Matrix m(n1 * n2, n0);
    for (std::size_t a = 0; a < n0; ++a) {
        const std::string wa = where + "/" + std::to_string(a);
        array_of(j[a], n1, wa);
        for (std::size_t b = 0; b < n1; ++b) {
            const std::string wb = wa + "/" + std::to_string(b);
            const Vec row = vec_from_json(j[a][b], n2, conductor, wb);
            for (std::size_t c = 0; c < n2; ++c) m(b * n2 + c, a) = row[c];
        }
    }
    return m;
}

Json tensor3_to_json(const Matrix& m, std::size_t n1, std::size_t n2) {
    Json out = Json::array();
    for (std::size_t a = 0; a < m.cols(); ++a) {
        Json ja = Json::array();
        for (std::size_t b = 0; b < n1; ++b) {
            Json jb = Json::array();
            for (std::size_t c = 0; c < n2; ++c) jb.push_back(scalar_to_json(m(b * n2 + c, a)));
            ja.push_back(std::move(jb));
        }
        out.push_back(std::move(ja));
    }
    return out;
}

int conductor_field(const Json& j, const std::string& where) {
    auto it = j.find("field");
    if (it == j.end()) return 1;
    const Json& n = field(*it, "cyclotomic", where + "/field");
    if (!n.is_number_integer() || n.get<std::int64_t>() < 1 || n.get<std::int64_t>() > kMaxConductor)
        bad(where + "/field/cyclotomic", "expected an integer in [1, " + std::to_string(kMaxConductor) + "]");
    return n.get<int>();
}

StructuredSpace basis_of(const Json& j, std::size_t d, const std::string& where) {
    auto it = j.find("basis");
    if (it == j.end()) return StructuredSpace::numbered(d);
    array_of(*it, d, where + "/basis");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) {
        if (!(*it)[i].is_string()) bad(where + "/basis/" + std::to_string(i), "expected a string label");
        labels.push_back((*it)[i].get<std::string>());
    }
    return StructuredSpace(labels);
}

int lcm_conductor(int acc, const Matrix& m) {
    for (const Scalar& s : m.data()) acc = std::lcm(acc, s.conductor());
    return acc;
}

}  // namespace

Scalar scalar_from_json(const Json& j, int conductor, const std::string& where) {
    if (j.is_object()) {
        const Json& n = field(j, "conductor", where);
        if (!n.is_number_integer() || n.get<std::int64_t>() < 1 || n.get<std::int64_t>() > kMaxConductor)
            bad(where + "/conductor", "expected an integer in [1, " + std::to_string(kMaxConductor) + "]");
        const Json& cs = field(j, "coeffs", where);
        if (!cs.is_array()) bad(where + "/coeffs", "expected an array of [num, den] pairs");
        std::vector<Rational> coeffs;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const std::string wi = where + "/coeffs/" + std::to_string(i);
            if (!cs[i].is_array() || cs[i].size() != 2) bad(wi, "expected a [num, den] pair");
            const Rational num = rational_from_json(cs[i][0], wi + "/0");
            const Rational den = rational_from_json(cs[i][1], wi + "/1");
            if (den.is_zero()) bad(wi + "/1", "zero denominator");
            coeffs.push_back(num / den);
        }
        return Scalar(n.get<int>(), coeffs);
    }
    if (!j.is_array()) return Scalar(rational_from_json(j, where));
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < j.size(); ++i) coeffs.push_back(rational_from_json(j[i], where + "/" + std::to_string(i)));
    return Scalar(conductor, coeffs);
}

Json scalar_to_json(const Scalar& s) {
    Json coeffs = Json::array();
    for (const Rational& r : s.coeffs()) coeffs.push_back(Json::array({integer_json(r.num_str()), integer_json(r.den_str())}));
    return Json{{"conductor", s.conductor()}, {"coeffs", std::move(coeffs)}};
}

Algebra algebra_from_json(const Json& j, int conductor, const std::string& where) {
    const std::size_t d = dim_of(j, where);
    const StructuredSpace s = basis_of(j, d, where);
    // mult[i][j][k]: outer pair (i, j) is the source e_i⊗e_j.
    const Json& mj = array_of(field(j, "mult", where), d, where + "/mult");
    Matrix mult(d, d * d);
    for (std::size_t a = 0; a < d; ++a) {
        const std::string wa = where + "/mult/" + std::to_string(a);
        array_of(mj[a], d, wa);
        for (std::size_t b = 0; b < d; ++b)
            mult.set_column(a * d + b, vec_from_json(mj[a][b], d, conductor, wa + "/" + std::to_string(b)));
    }
    return Algebra(s, std::move(mult), vec_from_json(field(j, "unit", where), d, conductor, where + "/unit"));
}

HopfAlgebra hopf_from_json(const Json& j, const std::string& where) {
    const int n = conductor_field(j, where);
    const std::size_t d = dim_of(j, where);
    const Algebra alg = algebra_from_json(j, n, where);
    const Coalgebra coal(alg.space(), tensor3_from_json(field(j, "comult", where), d, d, d, n, where + "/comult"),
                         vec_from_json(field(j, "counit", where), d, n, where + "/counit"));
    const Json& sj = array_of(field(j, "antipode", where), d, where + "/antipode");
    Matrix s(d, d);
    for (std::size_t i = 0; i < d; ++i) s.set_column(i, vec_from_json(sj[i], d, n, where + "/antipode/" + std::to_string(i)));
    std::optional<Matrix> r;
    if (auto it = j.find("dqt"); it != j.end()) {
        array_of(*it, d, where + "/dqt");
        Matrix rm(d, d);
        for (std::size_t a = 0; a < d; ++a) rm.set_row(a, vec_from_json((*it)[a], d, n, where + "/dqt/" + std::to_string(a)));
        r = std::move(rm);
    }
    std::string name = "json";
    if (auto it = j.find("name"); it != j.end() && it->is_string()) name = it->get<std::string>();
    return HopfAlgebra(name, alg, coal, std::move(s), std::move(r));
}

int conductor_of(const HopfAlgebra& h) {
    int n = lcm_conductor(1, h.algebra.mult());
    n = lcm_conductor(n, h.coalgebra.comult());
    n = lcm_conductor(n, h.antipode);
    if (h.r_form) n = lcm_conductor(n, *h.r_form);
    return n;
}

Json hopf_to_json(const HopfAlgebra& h) {
    const int n = conductor_of(h);
    const std::size_t d = h.dim();
    Json j;
    j["name"] = h.name;
    j["field"] = {{"cyclotomic", n}};
    j["dim"] = d;
    j["basis"] = h.space().labels();
    // The product is stored with the pair (i, j) as one column; regroup it as mult[i][j][k].
    Json mult = Json::array();
    for (std::size_t a = 0; a < d; ++a) {
        Json ja = Json::array();
        for (std::size_t b = 0; b < d; ++b) {
            Json jb = Json::array();
            for (std::size_t c = 0; c < d; ++c) jb.push_back(scalar_to_json(h.algebra.mult()(c, a * d + b)));
            ja.push_back(std::move(jb));
        }
        mult.push_back(std::move(ja));
    }
    j["mult"] = std::move(mult);
    Json unit = Json::array(), counit = Json::array(), s = Json::array();
    for (std::size_t i = 0; i < d; ++i) {
        unit.push_back(scalar_to_json(h.unit()[i]));
        counit.push_back(scalar_to_json(h.counit()[i]));
        Json row = Json::array();
        for (std::size_t k = 0; k < d; ++k) row.push_back(scalar_to_json(h.antipode(k, i)));
        s.push_back(std::move(row));
    }
    j["unit"] = std::move(unit);
    j["comult"] = tensor3_to_json(h.coalgebra.comult(), d, d);
    j["counit"] = std::move(counit);
    j["antipode"] = std::move(s);
    if (h.r_form) {
        Json r = Json::array();
        for (std::size_t a = 0; a < d; ++a) {
            Json row = Json::array();
            for (std::size_t b = 0; b < d; ++b) row.push_back(scalar_to_json((*h.r_form)(a, b)));
            r.push_back(std::move(row));
        }
        j["dqt"] = std::move(r);
    }
    return j;
}

Comodule comodule_from_json(const Json& j, const HopfAlgebra& host, const StructuredSpace& space, int conductor,
                            const std::string& where) {
    const std::size_t d = space.dim(), dh = host.dim();
    if (auto it = j.find("grading"); it != j.end()) {
        array_of(*it, d, where + "/grading");
        Matrix co(d * dh, d);
        for (std::size_t i = 0; i < d; ++i) {
            const Json& g = (*it)[i];
            if (!g.is_number_integer() || g.get<std::int64_t>() < 0 || g.get<std::uint64_t>() >= dh)
                bad(where + "/grading/" + std::to_string(i), "expected a basis index of the host");
            co(i * dh + g.get<std::size_t>(), i) = 1;
        }
        return Comodule(space, host.coalgebra, std::move(co));
    }
    return Comodule(space, host.coalgebra,
                    tensor3_from_json(field(j, "coaction", where), d, d, dh, conductor, where + "/coaction"));
}

Json comodule_to_json(const Comodule& v, const std::string& host_ref) {
    Json j;
    j["host"] = host_ref;
    j["dim"] = v.dim();
    j["coaction"] = tensor3_to_json(v.coaction(), v.dim(), v.coalgebra().dim());
    return j;
}

Json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(source + ": " + e.what());
    }
}

}  // namespace ncg
