#include "ncgauge/catalog/suites.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

#include "ncgauge/bundle/associated.hpp"
#include "ncgauge/bundle/connection.hpp"
#include "ncgauge/bundle/gauge.hpp"
#include "ncgauge/foundation/errors.hpp"
#include "ncgauge/foundation/kernels.hpp"
#include "ncgauge/foundation/sampling.hpp"
#include "ncgauge/hopf/iso.hpp"
#include "ncgauge/hopf/presentation.hpp"
#include "ncgauge/local/local.hpp"

namespace ncg {

namespace {

constexpr Suite kConcrete[] = {Suite::Hopf,       Suite::Bundle, Suite::Connection, Suite::Gauge,       Suite::Cocycle,
                               Suite::Associated, Suite::Local,  Suite::Braided,    Suite::Bosonisation};

using CaseFn = std::function<Report()>;

struct PendingCase {
    std::string suite;
    std::string name;
    CaseFn fn;
};

Report single(CheckResult c) {
    Report r;
    r.add(std::move(c));
    return r;
}

// Exceptions from a case become a failed check rather than aborting the run.
Report guarded(const CaseFn& fn) {
    try {
        return fn();
    } catch (const InvariantFailure& e) {
        return single(fail(e.clause(), Witness{"", e.witness(), ""}, e.what()));
    } catch (const std::exception& e) {
        return single(fail("exception", e.what()));
    }
}

int matrix_conductor(int acc, const Matrix& m) {
    for (const Scalar& s : m.data()) acc = std::lcm(acc, s.conductor());
    return acc;
}

std::string dims(const PrincipalBundle& b) {
    return "dim P = " + std::to_string(b.dim_p()) + ", dim M = " + std::to_string(b.m().dim()) +
           ", dim H = " + std::to_string(b.dim_h());
}

Matrix sample_family(const AffineFamily& f, std::mt19937& rng, int conductor) {
    Matrix x = f.base;
    for (const Matrix& d : f.directions) x = x + sampling::random_scalar(rng, conductor) * d;
    return x;
}

// Images of the basis, one "e ↦ image" entry per source element.
std::string describe_map(const Matrix& map, const StructuredSpace& source, const StructuredSpace& target) {
    std::string out;
    for (std::size_t c = 0; c < map.cols(); ++c) {
        if (!out.empty()) out += "; ";
        out += source.label(c) + " -> " + render(map.column(c), target);
    }
    return out;
}

class Runner {
public:
    Runner(const Input& in, const RunOptions& o) : in_(in), opt_(o), rng_(o.seed) {
        conductor_ = conductor_of(in.hopf);
        if (in.bundle) {
            conductor_ = matrix_conductor(conductor_, in.bundle->algebra.mult());
            conductor_ = matrix_conductor(conductor_, in.bundle->comodule.coaction());
        }
        if (in.braided) {
            conductor_ = matrix_conductor(conductor_, in.braided->algebra.mult());
            conductor_ = matrix_conductor(conductor_, in.braided->coalgebra.comult());
        }
    }

    void add_suite(Suite s) {
        switch (s) {
            case Suite::Hopf: return hopf_suite();
            case Suite::Bundle: return bundle_suite();
            case Suite::Connection: return connection_suite();
            case Suite::Gauge: return gauge_suite();
            case Suite::Cocycle: return cocycle_suite();
            case Suite::Associated: return associated_suite();
            case Suite::Local: return local_suite();
            case Suite::Braided: return braided_suite();
            case Suite::Bosonisation: return bosonisation_suite();
            case Suite::All: break;
        }
        throw std::logic_error("add_suite(All)");
    }

    void skip(Suite s, const std::string& why) {
        add(to_string(s), "precondition", [why] { return single(undecided("precondition", why)); });
    }

    std::vector<CaseResult> execute() {
        std::vector<CaseResult> out(cases_.size());
        const long n = static_cast<long>(cases_.size());
#pragma omp parallel for schedule(dynamic) num_threads(kernels::thread_count())
        for (long i = 0; i < n; ++i) {
            const PendingCase& c = cases_[static_cast<std::size_t>(i)];
            const auto t0 = std::chrono::steady_clock::now();
            Report r = guarded(c.fn);
            const auto t1 = std::chrono::steady_clock::now();
            out[static_cast<std::size_t>(i)] =
                CaseResult{c.suite, c.name, std::move(r), std::chrono::duration<double>(t1 - t0).count()};
        }
        std::stable_sort(out.begin(), out.end(), [](const CaseResult& a, const CaseResult& b) {
            return std::tie(a.suite, a.name) < std::tie(b.suite, b.name);
        });
        return out;
    }

private:
    const Input& in_;
    RunOptions opt_;
    std::mt19937 rng_;  // draws made while queuing cases, so they are schedule independent
    int conductor_ = 1;
    std::vector<PendingCase> cases_;

    // Lazily built shared state; only touched while queuing.
    bool hopf_checked_ = false;
    std::optional<PrincipalBundle> bundle_;
    std::string bundle_error_;
    bool bundle_tried_ = false;
    std::optional<Trivialisation> triv_;
    std::optional<TrivialisationSearch> search_;
    bool triv_tried_ = false;
    std::optional<BraidedCategory> cat_;
    std::optional<Bosonisation> bos_;
    std::string bos_error_;
    bool bos_tried_ = false;

    void add(std::string suite, std::string name, CaseFn fn) {
        cases_.push_back({std::move(suite), std::move(name), std::move(fn)});
    }

    std::uint32_t case_seed() { return opt_.seed + static_cast<std::uint32_t>(cases_.size()) * 7919u; }

    void require_hopf() {
        if (hopf_checked_) return;
        const Report r = check_hopf_axioms(in_.hopf);
        if (!r.passed())
            throw AxiomPrecheckError(in_.name + ": the Hopf algebra fails '" + r.first_failure()->name +
                                     "'; run the hopf suite for a witness");
        hopf_checked_ = true;
    }

    const PrincipalBundle* bundle() {
        if (!in_.bundle) return nullptr;
        if (!bundle_tried_) {
            bundle_tried_ = true;
            try {
                bundle_ = build_bundle(*in_.bundle, in_.name);
            } catch (const InvariantFailure& e) {
                bundle_error_ = e.what();
            }
        }
        return bundle_ ? &*bundle_ : nullptr;
    }

    const PrincipalBundle& require_bundle() {
        if (!in_.bundle) throw AxiomPrecheckError(in_.name + ": input carries no bundle");
        require_hopf();
        const PrincipalBundle* b = bundle();
        if (!b) throw AxiomPrecheckError(in_.name + ": not a principal bundle: " + bundle_error_);
        return *b;
    }

    const Trivialisation* trivialisation() {
        const PrincipalBundle* b = bundle();
        if (!b) return nullptr;
        if (!triv_tried_) {
            triv_tried_ = true;
            if (in_.trivialisation) {
                if (check_trivialisation(*b, *in_.trivialisation).passed())
                    triv_ = make_trivialisation(*b, *in_.trivialisation);
            } else {
                search_ = find_trivialisation(*b);
                if (search_->found) triv_ = *search_->found;
            }
        }
        return triv_ ? &*triv_ : nullptr;
    }

    const Trivialisation& require_trivialisation() {
        require_bundle();
        const Trivialisation* t = trivialisation();
        if (!t)
            throw AxiomPrecheckError(in_.name + ": no trivialisation available" +
                                     (search_ ? " (" + search_->detail + ")" : std::string()));
        return *t;
    }

    const BraidedCategory& require_category() {
        if (!cat_) {
            if (in_.category) {
                cat_ = *in_.category;
            } else if (in_.hopf.r_form) {
                require_hopf();
                const Report r = check_dqt(in_.hopf, *in_.hopf.r_form);
                if (!r.passed())
                    throw AxiomPrecheckError(in_.name + ": the dual-quasitriangular form fails '" +
                                             r.first_failure()->name + "'");
                cat_ = braided_category(in_.hopf);
            } else {
                throw AxiomPrecheckError(in_.name + ": no dual-quasitriangular structure");
            }
        }
        return *cat_;
    }

    const Bosonisation* bosonisation() {
        if (!bos_tried_) {
            bos_tried_ = true;
            if (in_.bosonisation) {
                bos_ = *in_.bosonisation;
            } else if (in_.braided) {
                try {
                    bos_ = bosonise(require_category(), *in_.braided);
                } catch (const InvariantFailure& e) {
                    bos_error_ = e.what();
                }
            }
        }
        return bos_ ? &*bos_ : nullptr;
    }

    std::vector<FormMap> gauge_fields(const PrincipalBundle& b, int generic) {
        std::vector<FormMap> out{FormMap{Matrix(b.m().dim() * b.m().dim(), b.dim_h()), 1}};
        for (int i = 0; i < generic; ++i)
            out.push_back(sample_gauge_field(b.m().algebra, b.h().coalgebra, b.h().unit(), rng_, conductor_));
        return out;
    }

    // ---- suites ----

    void hopf_suite() {
        const HopfAlgebra& h = in_.hopf;
        add("hopf", "axioms", [&h] { return check_hopf_axioms(h); });
        add("hopf", "antipode invertible", [&h] {
            antipode_inverse(h);
            return single(pass("S bijective"));
        });
        add("hopf", "grouplikes", [&h] {
            const GrouplikeSearch g = grouplikes(h);
            Report r;
            for (const Vec& x : g.grouplikes)
                r.add(compare_vectors("grouplike", render(x, h.space()), h.coalgebra.comultiply(x), kron(x, x),
                                      StructuredSpace::tensor(h.space(), h.space())));
            r.add(pass("count", std::to_string(g.grouplikes.size()) + (g.complete ? " (complete)" : " (partial)")));
            return r;
        });
        if (h.r_form) add("hopf", "dqt", [&h] { return check_dqt(h, *h.r_form); });
    }

    void bundle_suite() {
        if (!in_.bundle) throw AxiomPrecheckError(in_.name + ": input carries no bundle");
        require_hopf();
        const ComoduleAlgebra& p = *in_.bundle;
        add("bundle", "comodule algebra", [&p] { return check_comodule_algebra(p); });
        const PrincipalBundle* b = bundle();
        if (!b) {
            const std::string err = bundle_error_;
            add("bundle", "galois", [err] { return single(fail("principal bundle", err)); });
            return;
        }
        add("bundle", "galois", [b] {
            Report r = check_galois(b->galois);
            r.add(pass("dimensions", dims(*b)));
            return r;
        });
        add("bundle", "chi covariance", [b] { return check_chi_covariance(*b); });
        trivialisation();
        const std::optional<TrivialisationSearch> search = search_;
        const Input& in = in_;
        add("bundle", "trivialisation", [b, search, &in] {
            if (in.trivialisation) return check_trivialisation(*b, *in.trivialisation);
            Report r;
            if (search->status == Status::Pass) {
                r = check_trivialisation(*b, search->found->phi);
                r.add(pass("search", search->detail));
            } else if (search->status == Status::Fail) {
                r.add(pass("search", "certified: no trivialisation exists; " + search->detail));
            } else {
                r.add(undecided("search", search->detail));
            }
            return r;
        });
    }

    void connection_suite() {
        const PrincipalBundle& b = require_bundle();
        std::vector<std::pair<std::string, Matrix>> omegas;
        bool from_fields = false;
        if (const Trivialisation* t = trivialisation()) {
            from_fields = true;
            const std::vector<FormMap> as = gauge_fields(b, 2);
            for (std::size_t i = 0; i < as.size(); ++i)
                omegas.emplace_back(i == 0 ? "A = 0" : "A generic " + std::to_string(i),
                                    gauge_field_connection(b, *t, as[i]));
        } else {
            const std::optional<ConnectionSpace> space = connection_space(b);
            if (!space) {
                add("connection", "existence", [] { return single(fail("connection space", "no connection solves the axioms")); });
                return;
            }
            omegas.emplace_back("base", space->base);
            for (int i = 1; i <= 2; ++i)
                omegas.emplace_back("generic " + std::to_string(i), sample_family(*space, rng_, conductor_));
        }
        for (auto& [name, omega] : omegas) {
            add("connection", name, [&b, w = omega, from_fields] {
                Report r = check_connection(b, w);
                if (!r.passed()) return r;
                const ConnectionForm cf = make_connection(b, w);
                const ConnectionProjection p = projection_from_connection(b, cf);
                r.append(check_projection(b, p.pi), "projection: ");
                const ConnectionForm back = connection_from_projection(b, p);
                const StructuredSpace pp = b.galois.pp();
                r.add(compare_maps("omega -> Pi -> omega", back.omega, w, b.h().space(), pp));
                r.add(compare_on("Pi -> omega -> Pi", projection_from_connection(b, back).pi, p.pi, b.omega1.vectors(),
                                 pp, pp));
                // is_strong throws if its two criteria disagree, so reaching here means they agree.
                const StrongVerdict v = is_strong(b, cf);
                if (from_fields) {
                    r.append(v.report, "strong: ");
                    r.add(check("gauge-field connection is strong", v.strong));
                } else {
                    r.add(pass("strong verdict", v.strong ? "strong" : "not strong (both criteria agree)"));
                }
                if (v.strong)
                    r.append(check_strongly_tensorial(b, b.rho(), covariant_derivative_of_identity(b, cf)), "D(id): ");
                return r;
            });
        }
    }

    void gauge_suite() {
        const PrincipalBundle& b = require_bundle();
        const Trivialisation& t = require_trivialisation();
        const std::vector<FormMap> as = gauge_fields(b, 1);
        for (int k = 1; k <= 2; ++k) {
            const Matrix gamma = sample_local_gauge(b.m().algebra, b.h().coalgebra, b.h().unit(), rng_, conductor_);
            add("gauge", "transform " + std::to_string(k), [&b, &t, as, gamma] {
                const GaugeTransform g = global_gauge_from_local(b, t, gamma);
                const GaugedBundle pg = bundle_gauge_transform(b, g);
                std::vector<ConnectionForm> ws;
                for (const FormMap& a : as) ws.push_back(connection_from_gauge_field(b, t, a));
                Report r = check_bundle_gauge_covariance(b, g, pg, ws, &t, as);
                r.append(check_local_to_global(b, t, gamma, as), "local: ");
                r.add(compare_maps("Gamma -> Theta -> Gamma", gamma_from_theta(b, pg.theta).gamma, g.gamma,
                                   b.h().space(), b.p().space()));
                return r;
            });
        }
    }

    void cocycle_suite() {
        if (!in_.cocycle) throw AxiomPrecheckError(in_.name + ": input carries no cocycle data");
        require_hopf();
        const CocycleData& data = *in_.cocycle;
        const CrossProduct cp = cocycle_cross_product(data, in_.name);
        auto shared = std::make_shared<const CrossProduct>(cp);
        add("cocycle", "cross product", [shared] { return shared->report; });
        add("cocycle", "extraction", [shared, &data] {
            const CocycleData d = extract_cocycle_data(shared->bundle);
            const StructuredSpace hh = StructuredSpace::tensor(data.h.space(), data.h.space());
            const StructuredSpace hm = StructuredSpace::tensor(data.h.space(), data.m.space());
            Report r;
            r.add(compare_maps("cocycle c", d.c, data.c, hh, data.m.space()));
            r.add(compare_maps("action alpha", d.alpha, data.alpha, hm, data.m.space()));
            const StructuredSpace& ps = shared->bundle.p().space();
            r.add(compare_maps("product table", cross_product_mult(d), shared->bundle.p().mult(),
                               StructuredSpace::tensor(ps, ps), ps));
            return r;
        });
        const PrincipalBundle& b = shared->bundle;
        for (int k = 1; k <= 3; ++k) {
            const Matrix gamma = sample_local_gauge(b.m().algebra, b.h().coalgebra, b.h().unit(), rng_, conductor_);
            add("cocycle", "gauge " + std::to_string(k), [shared, gamma] {
                const PrincipalBundle& bb = shared->bundle;
                const GaugeTransform g = global_gauge_from_local(bb, shared->trivialisation, gamma);
                const GaugedBundle pg = bundle_gauge_transform(bb, g);
                const CocycleData d = extract_cocycle_data(pg.bundle);
                const StructuredSpace& ps = pg.bundle.p().space();
                return single(compare_maps("canonical form", cross_product_mult(d), pg.bundle.p().mult(),
                                           StructuredSpace::tensor(ps, ps), ps));
            });
        }
    }

    void associated_suite() {
        const PrincipalBundle& b = require_bundle();
        const Trivialisation* t = trivialisation();
        const HopfAlgebra& h = b.h();
        const std::vector<std::pair<std::string, PointedComodule>> vs{
            {"trivial line",
             make_pointed(trivial_comodule(StructuredSpace({"v"}), h.coalgebra, h.unit()), Vec{Scalar(1)}, h.unit())},
            {"regular", make_pointed(b.h_comodules.right, h.unit(), h.unit())},
            {"adjoint", make_pointed(b.h_comodules.adjoint, h.unit(), h.unit())}};
        const int cond = conductor_;
        for (const auto& [name, v] : vs) {
            add("associated", name, [&b, t, v = v, seed = case_seed(), cond] {
                std::mt19937 rng(seed);
                const AssociatedBundle e = associated_bundle(b, v);
                Report r = e.report;
                const auto sigmas = pseudotensorial_space(b, e);
                const auto sections = section_space(b, e);
                r.add(check("pseudotensorial maps exist", sigmas.has_value()));
                r.add(check("sections exist", sections.has_value()));
                if (!sigmas || !sections) return r;
                for (int i = 0; i < 2; ++i)
                    r.append(check_section_correspondence(b, e, sample_family(*sigmas, rng, cond)),
                             "Sigma " + std::to_string(i + 1) + ": ");
                const Matrix s = sample_family(*sections, rng, cond);
                r.append(check_section(b, e, s), "section: ");
                const Matrix sigma = sigma_from_section(b, e, s);
                r.append(check_pseudotensorial(b, e, sigma), "Sigma(s): ");
                r.add(compare_maps("s -> Sigma -> s", section_from_sigma(b, e, sigma), s, e.e.ambient(),
                                   b.m().algebra.space()));
                if (t) r.append(check_fibre_trivialisation(b, e, *t), "Phi_E: ");
                return r;
            });
        }
    }

    void local_suite() {
        require_hopf();
        const bool braided = in_.braided && in_.braided->dim() > 1;
        const Coalgebra& c = braided ? in_.braided->coalgebra : in_.hopf.coalgebra;
        const Vec& one = braided ? in_.braided->algebra.unit() : in_.hopf.unit();
        const std::vector<std::pair<std::string, Algebra>> bases{{"M = k", Algebra::ground()},
                                                                 {"M = k(Z2)", function_algebra(2).algebra}};
        const std::size_t max_degree = opt_.max_degree;
        const int cond = conductor_;
        for (const auto& [mname, m] : bases) {
            for (int trial = 1; trial <= 2; ++trial) {
                add("local", mname + " trial " + std::to_string(trial),
                    [&c, &one, m = m, seed = case_seed(), cond, max_degree] {
                        std::mt19937 rng(seed);
                        const Comodule v(c.space(), c, c.comult());
                        const FormMap a = sample_gauge_field(m, c, one, rng, cond);
                        Report r = check_gauge_field(m, c, one, a);
                        const FormMap f = curvature(m, c, a);
                        r.add(check("Bianchi dF + A*F - F*A = 0", is_zero(bianchi_residue(m, c, a, f).values.data())));
                        for (std::size_t n = 0; n <= max_degree; ++n) {
                            CheckResult nn = check_nabla_squared(m, c, v, a, sample_matter_field(m, v.dim(), n, rng, cond));
                            nn.name = "nabla^2 = -sigma*F, degree " + std::to_string(n) + ": " + nn.name;
                            r.add(std::move(nn));
                        }
                        const Matrix gamma = sample_local_gauge(m, c, one, rng, cond);
                        r.append(check_local_covariance(m, c, v, one, a, gamma, sample_matter_field(m, v.dim(), 0, rng, cond)),
                                 "covariance: ");
                        return r;
                    });
            }
        }
    }

    void braided_suite() {
        const BraidedCategory& cat = require_category();
        const bool has_group = in_.braided && in_.braided->dim() > 1;
        add("braided", "dqt", [&cat] { return check_dqt(cat.h, cat.r.r); });
        const Comodule reg = standard_comodules(cat.h).right;
        add("braided", "hexagons", [&cat, reg, this, has_group] {
            if (!has_group) return check_hexagons(cat, reg, reg, reg);
            const Comodule& v = in_.braided->coaction;
            Report r = check_hexagons(cat, v, v, reg);
            r.append(check_hexagons(cat, reg, v, v), "H,B,B: ");
            return r;
        });
        if (!has_group) return;
        const BraidedGroup& g = *in_.braided;
        add("braided", "braided group", [&cat, &g] { return check_braided_group(cat, g); });
        add("braided", "braided tensor algebra", [&cat, &g] {
            const ComoduleAlgebra a = g.as_comodule_algebra(cat);
            const ComoduleAlgebra t = braided_tensor_algebra(cat, a, a);
            Report r = check_algebra_axioms(t.algebra);
            r.append(check_comodule_algebra(t), "comodule algebra: ");
            return r;
        });
        const ComoduleAlgebra point{Algebra::ground(), cat.h,
                                    trivial_comodule(StructuredSpace::ground(), cat.h.coalgebra, cat.h.unit())};
        add("braided", "bundle over a point", [&cat, &g, point] {
            return braided_tensor_bundle_report(braided_trivial_bundle(cat, point, g), {});
        });
        if (g.dim() <= 3) {
            const std::uint32_t seed = case_seed();
            add("braided", "bundle over B", [&cat, &g, seed, cond = conductor_] {
                const BraidedBundle b = braided_trivial_bundle(cat, g.as_comodule_algebra(cat), g);
                std::mt19937 rng(seed);
                return braided_tensor_bundle_report(b, generic_field(b, rng, cond));
            });
        }
    }

    static std::optional<Matrix> generic_field(const BraidedBundle& b, std::mt19937& rng, int cond) {
        const std::vector<Matrix> fields = admissible_gauge_fields(b);
        if (fields.empty()) return std::nullopt;
        Matrix a = Scalar(0) * fields.front();
        for (const Matrix& f : fields) a = a + sampling::random_scalar(rng, cond) * f;
        return a;
    }

    // Bundle axioms, trivialisation, and the tensor connection for A = 0 and optionally a generic A.
    static Report braided_tensor_bundle_report(const BraidedBundle& b, const std::optional<Matrix>& generic) {
        Report r = check_braided_bundle(b);
        const BraidedTrivialisation t = tensor_trivialisation(b);
        r.append(check_braided_trivialisation(b, t), "trivialisation: ");
        const std::size_t dm = b.base_factor.algebra.dim();
        const Matrix w0 = tensor_connection(b, t, Matrix(dm * dm, b.dim_b()));
        const std::optional<Comodule> ad = solve_adjoint_candidate(b, w0);
        r.add(check("adjoint candidate solves the intertwiner constraint", ad.has_value()));
        const Comodule* adp = ad ? &*ad : nullptr;
        r.append(check_braided_connection(b, w0, adp), "A = 0: ");
        if (generic) r.append(check_braided_connection(b, tensor_connection(b, t, *generic), adp), "A generic: ");
        return r;
    }

    void bosonisation_suite() {
        if (!in_.bosonisation && !in_.braided) throw AxiomPrecheckError(in_.name + ": input carries no braided group");
        const Bosonisation* bos = bosonisation();
        if (!bos) {
            const std::string err = bos_error_;
            add("bosonisation", "hopf", [err] { return single(fail("bosonisation", err)); });
            return;
        }
        add("bosonisation", "hopf", [bos] {
            Report r = bos->report;
            r.append(check_hopf_axioms(bos->hopf), "axioms: ");
            return r;
        });
        if (in_.line_order) {
            const int n = *in_.line_order;
            add("bosonisation", "isomorphism", [bos, n] {
                Report r;
                std::vector<HopfAlgebra> targets{taft_presented(n, n - 1)};
                if (n == 2) targets.push_back(sweedler());
                for (const HopfAlgebra& target : targets) {
                    const auto iso = find_isomorphism(bos->hopf, target);
                    if (!iso) {
                        r.add(fail("isomorphic to " + target.name, "no isomorphism found"));
                        continue;
                    }
                    r.add(pass("isomorphic to " + target.name,
                               describe_map(iso->map, bos->hopf.space(), target.space())));
                    r.append(check_hopf_morphism(bos->hopf, target, iso->map), target.name + ": ");
                }
                return r;
            });
        }

        auto bb = std::make_shared<const BraidedBundle>(bosonisation_as_braided_bundle(*bos));
        std::mt19937 rng(case_seed());
        const std::optional<Matrix> generic = generic_field(*bb, rng, conductor_);
        add("bosonisation", "braided bundle", [bb] {
            Report r = check_braided_bundle(*bb);
            r.append(check_braided_trivialisation(*bb, tensor_trivialisation(*bb)), "trivialisation: ");
            return r;
        });
        const std::size_t dm = bb->base_factor.algebra.dim();
        std::vector<std::pair<std::string, Matrix>> as{{"A = 0", Matrix(dm * dm, bb->dim_b())}};
        if (generic) as.emplace_back("A generic", *generic);
        for (const auto& [name, a] : as) {
            add("bosonisation", "tensor connection, " + name, [bb, a = a] {
                const BraidedTrivialisation t = tensor_trivialisation(*bb);
                const Matrix w0 = tensor_connection(*bb, t, Matrix(a.rows(), a.cols()));
                const std::optional<Comodule> ad = solve_adjoint_candidate(*bb, w0);
                Report r;
                r.add(check("adjoint candidate solves the intertwiner constraint", ad.has_value()));
                r.append(check_braided_connection(*bb, tensor_connection(*bb, t, a), ad ? &*ad : nullptr));
                return r;
            });
        }

        auto q = std::make_shared<const QuantumBosonisationBundle>(bosonisation_as_quantum_bundle(*bos));
        const PrincipalBundle& qb = q->bundle;
        add("bosonisation", "quantum bundle", [q] {
            Report r = check_galois(q->bundle.galois);
            r.append(check_trivialisation(q->bundle, q->trivialisation.phi), "trivialisation: ");
            r.add(pass("dimensions", dims(q->bundle)));
            return r;
        });
        std::vector<std::pair<std::string, FormMap>> fields{
            {"A = 0", FormMap{Matrix(qb.m().dim() * qb.m().dim(), qb.dim_h()), 1}},
            {"A generic", sample_gauge_field(qb.m().algebra, qb.h().coalgebra, qb.h().unit(), rng_, conductor_)}};
        for (const auto& [name, a] : fields) {
            add("bosonisation", "quantum connection, " + name, [q, a = a] {
                const Matrix w = gauge_field_connection(q->bundle, q->trivialisation, a);
                Report r = check_connection(q->bundle, w);
                if (!r.passed()) return r;
                const StrongVerdict v = is_strong(q->bundle, make_connection(q->bundle, w));
                r.append(v.report, "strong: ");
                return r;
            });
        }
        add("bosonisation", "entwining", [bos] {
            const BosonisationEntwining e = entwining_from_bosonisation(*bos);
            return e.report;
        });
    }
};

std::string seconds_str(double s) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(3) << s << " s";
    return o.str();
}

Status parse_status(const Json& j, const std::string& where) {
    const std::string s = j.is_string() ? j.get<std::string>() : std::string();
    if (s == "pass") return Status::Pass;
    if (s == "fail") return Status::Fail;
    if (s == "undecided") return Status::Undecided;
    throw ParseError(where + ": expected \"pass\", \"fail\" or \"undecided\"");
}

}  // namespace

const char* to_string(Suite s) {
    switch (s) {
        case Suite::Hopf: return "hopf";
        case Suite::Bundle: return "bundle";
        case Suite::Connection: return "connection";
        case Suite::Gauge: return "gauge";
        case Suite::Cocycle: return "cocycle";
        case Suite::Associated: return "associated";
        case Suite::Local: return "local";
        case Suite::Braided: return "braided";
        case Suite::Bosonisation: return "bosonisation";
        case Suite::All: return "all";
    }
    return "?";
}

std::optional<Suite> parse_suite(const std::string& name) {
    for (Suite s : kConcrete)
        if (name == to_string(s)) return s;
    if (name == "all") return Suite::All;
    return std::nullopt;
}

Status CaseResult::status() const {
    Status s = Status::Pass;
    for (const CheckResult& c : report.checks) {
        if (c.status == Status::Fail) return Status::Fail;
        if (c.status == Status::Undecided) s = Status::Undecided;
    }
    return s;
}

bool RunReport::passed() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.status() == Status::Pass; });
}

std::vector<Suite> applicable_suites(const Input& in) {
    std::vector<Suite> out{Suite::Hopf};
    if (in.bundle) {
        out.push_back(Suite::Bundle);
        out.push_back(Suite::Connection);
        if (in.trivialisation) out.push_back(Suite::Gauge);
    }
    if (in.cocycle) out.push_back(Suite::Cocycle);
    if (in.bundle) out.push_back(Suite::Associated);
    out.push_back(Suite::Local);
    if (in.category || in.hopf.r_form) out.push_back(Suite::Braided);
    if (in.bosonisation || (in.braided && in.braided->dim() > 1)) out.push_back(Suite::Bosonisation);
    return out;
}

RunReport run(const Input& in, Suite suite, const RunOptions& options) {
    Runner runner(in, options);
    if (suite == Suite::All) {
        for (Suite s : applicable_suites(in)) {
            // Under `all`, a suite whose precondition fails is reported rather than aborting the run.
            try {
                runner.add_suite(s);
            } catch (const AxiomPrecheckError& e) {
                runner.skip(s, e.what());
            }
        }
    } else {
        runner.add_suite(suite);
    }
    return RunReport{in.name, to_string(suite), runner.execute()};
}

std::string render_text(const RunReport& r, bool timings) {
    std::ostringstream o;
    o << "input: " << r.input << "\nsuite: " << r.suite << "\n";
    std::size_t counts[3] = {0, 0, 0};
    for (const CaseResult& c : r.cases) {
        const Status s = c.status();
        ++counts[static_cast<int>(s)];
        std::string tag = to_string(s);
        std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char ch) { return std::toupper(ch); });
        o << std::left << std::setw(10) << tag << c.suite << "/" << c.name << "  (" << c.report.checks.size()
          << (c.report.checks.size() == 1 ? " check" : " checks");
        if (timings) o << ", " << seconds_str(c.seconds);
        o << ")\n";
        for (const CheckResult& k : c.report.checks) {
            if (k.status == Status::Pass) continue;
            o << "          " << to_string(k.status) << ": " << k.name;
            if (!k.detail.empty()) o << ": " << k.detail;
            o << "\n";
            if (k.witness) {
                o << "            at " << k.witness->element << "\n";
                o << "            lhs = " << k.witness->lhs << "\n";
                o << "            rhs = " << k.witness->rhs << "\n";
            }
        }
    }
    o << "summary: " << r.cases.size() << " cases, " << counts[0] << " passed, " << counts[1] << " failed, "
      << counts[2] << " undecided\n";
    return o.str();
}

Json report_to_json(const RunReport& r, bool timings) {
    Json cases = Json::array();
    for (const CaseResult& c : r.cases) {
        Json checks = Json::array();
        for (const CheckResult& k : c.report.checks) {
            Json jk{{"name", k.name}, {"status", to_string(k.status)}, {"detail", k.detail}};
            if (k.witness)
                jk["witness"] = {{"element", k.witness->element}, {"lhs", k.witness->lhs}, {"rhs", k.witness->rhs}};
            checks.push_back(std::move(jk));
        }
        Json jc{{"suite", c.suite}, {"name", c.name}, {"status", to_string(c.status())}, {"checks", std::move(checks)}};
        if (timings) jc["seconds"] = c.seconds;
        cases.push_back(std::move(jc));
    }
    return Json{{"schema", "ncgauge-report/1"},
                {"input", r.input},
                {"suite", r.suite},
                {"passed", r.passed()},
                {"cases", std::move(cases)}};
}

RunReport report_from_json(const Json& j) {
    try {
        if (j.at("schema").get<std::string>() != "ncgauge-report/1") throw ParseError("/schema: unsupported version");
        RunReport r{j.at("input").get<std::string>(), j.at("suite").get<std::string>(), {}};
        const Json& cases = j.at("cases");
        for (std::size_t i = 0; i < cases.size(); ++i) {
            const Json& jc = cases[i];
            const std::string where = "/cases/" + std::to_string(i);
            CaseResult c{jc.at("suite").get<std::string>(), jc.at("name").get<std::string>(), {}, 0.0};
            if (jc.contains("seconds")) c.seconds = jc["seconds"].get<double>();
            const Json& checks = jc.at("checks");
            for (std::size_t k = 0; k < checks.size(); ++k) {
                const Json& jk = checks[k];
                CheckResult cr;
                cr.name = jk.at("name").get<std::string>();
                cr.status = parse_status(jk.at("status"), where + "/checks/" + std::to_string(k) + "/status");
                cr.detail = jk.at("detail").get<std::string>();
                if (jk.contains("witness")) {
                    const Json& w = jk["witness"];
                    cr.witness = Witness{w.at("element").get<std::string>(), w.at("lhs").get<std::string>(),
                                         w.at("rhs").get<std::string>()};
                }
                c.report.add(std::move(cr));
            }
            if (parse_status(jc.at("status"), where + "/status") != c.status())
                throw ParseError(where + "/status: inconsistent with its checks");
            r.cases.push_back(std::move(c));
        }
        return r;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

}  // namespace ncg
