// Acceptance gate: one pass/fail line per criterion, everything exact.
// Returns nonzero if any criterion fails.

#include "geolab/runner.hpp"
#include "testgen.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace geolab;
using testgen::Rng;

namespace {

namespace fs = std::filesystem;

int g_failures = 0;

void report(int n, const std::string& desc, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << desc << "\n";
    if (!ok) ++g_failures;
}

void note(const std::string& msg) { std::cerr << "  note: " << msg << "\n"; }

bool passed(const CheckResult& r) {
    return r.verdict == Verdict::Pass || r.verdict == Verdict::GenericPass;
}

ChartPtr chart3() {
    static ChartPtr c = make_chart({"x", "y", "z"});
    return c;
}
ChartPtr chart5() {
    static ChartPtr c = make_chart({"x1", "y1", "x2", "y2", "z"});
    return c;
}

Scalar sy() { return Scalar::variable(1); }
DiffForm dx() { return coord_differential(chart3(), 0); }
DiffForm dy() { return coord_differential(chart3(), 1); }
DiffForm dz() { return coord_differential(chart3(), 2); }
MultiVector ex() { return coord_vector(chart3(), 0); }
MultiVector ey() { return coord_vector(chart3(), 1); }
MultiVector ez() { return coord_vector(chart3(), 2); }

DiffForm eta0() { return dz() - sy() * dx(); }
DiffForm eta5() {
    return coord_differential(chart5(), 4)
         - Scalar::variable(1) * coord_differential(chart5(), 0)
         - Scalar::variable(3) * coord_differential(chart5(), 2);
}

Tensor11 phi_flat() {
    Matrix m(3, 3);
    m.at(1, 0) = Scalar(1);
    m.at(0, 1) = Scalar(-1);
    return Tensor11(chart3(), m);
}
Tensor11 phi_contact() {
    Matrix m(3, 3);
    m.at(1, 0) = Scalar(1);
    m.at(0, 1) = Scalar(-1);
    m.at(2, 1) = -sy();
    return Tensor11(chart3(), m);
}
Tensor11 phi_warped() {
    Poly one_plus_z = Poly::constant(GaussRat(1)) + Poly::variable(2);
    Matrix m(3, 3);
    m.at(1, 0) = Scalar(one_plus_z);
    m.at(0, 1) = -Scalar(Poly::constant(GaussRat(1)), one_plus_z);
    return Tensor11(chart3(), m);
}

AlmostContact ac_product() { return AlmostContact(phi_flat(), ez(), dz()); }
AlmostContact ac_contact() { return AlmostContact(phi_contact(), ez(), eta0()); }
AlmostContact ac_warped() { return AlmostContact(phi_warped(), ez(), dz()); }

CosymplecticPair cos_product() { return CosymplecticPair(wedge(dx(), dy()), dz()); }
CosymplecticPair cos_contact() { return CosymplecticPair(d(eta0()), eta0()); }

// Every generalized almost contact endomorphism the suite constructs.
std::vector<std::pair<std::string, EndoJ>> all_endos() {
    std::vector<std::pair<std::string, EndoJ>> out;
    out.emplace_back("J(ac product)", gac_from_almost_contact(ac_product()).first);
    out.emplace_back("J(ac contact)", gac_from_almost_contact(ac_contact()).first);
    out.emplace_back("J(ac warped)", gac_from_almost_contact(ac_warped()).first);
    out.emplace_back("J(cos product)", gac_from_cosymplectic(cos_product()).first);
    out.emplace_back("J(cos contact)", gac_from_cosymplectic(cos_contact()).first);
    return out;
}

std::vector<E1Section> full_frame(const ChartPtr& chart) {
    std::vector<E1Section> out;
    int n = 2 * (chart->dim() + 1);
    for (int k = 0; k < n; ++k) {
        std::vector<Scalar> coords(static_cast<std::size_t>(n));
        coords[static_cast<std::size_t>(k)] = Scalar(1);
        out.push_back(E1Section::from_coords(chart, coords));
    }
    return out;
}

// -------------------------------------------------------------- criterion 1

bool criterion1() {
    auto started = std::chrono::steady_clock::now();
    bool ok = true;
    Rng rng(90001);

    for (int t = 0; t < 200 && ok; ++t) {
        ChartPtr chart = (t % 2 == 0) ? chart3() : chart5();
        int degree = 1 + t % 3;
        FormPair p = testgen::random_form_pair(rng, chart, degree);
        FormPair dd = tilde_d(tilde_d(p));
        if (!dd.alpha().is_zero() || !dd.beta().is_zero()) {
            note("d~^2 != 0 at iteration " + std::to_string(t));
            ok = false;
        }
    }

    for (int t = 0; t < 100 && ok; ++t) {
        ChartPtr chart = (t % 3 == 0) ? chart5() : chart3();
        E1Section e = testgen::random_section(rng, chart);
        E1Section lhs = dorfman(e, e);
        FormPair dh = tilde_d(FormPair::function(chart, pairing(e, e)));
        if (!lhs.x().is_zero() || !lhs.f().is_zero() || lhs.alpha() != dh.alpha()
            || lhs.g() != dh.beta().value()) {
            note("[e, e] != d~<e, e> at iteration " + std::to_string(t));
            ok = false;
        }
    }

    for (int t = 0; t < 50 && ok; ++t) {
        ChartPtr chart = (t % 4 == 0) ? chart5() : chart3();
        E1Section a = testgen::random_section(rng, chart);
        E1Section b = testgen::random_section(rng, chart);
        E1Section c = testgen::random_section(rng, chart);
        if (dorfman(a, dorfman(b, c))
            != dorfman(dorfman(a, b), c) + dorfman(b, dorfman(a, c))) {
            note("Loday identity violated at iteration " + std::to_string(t));
            ok = false;
        }
    }

    for (const auto& [name, j] : all_endos()) {
        std::vector<E1Section> frame = full_frame(j.chart());
        for (std::size_t a = 0; a < frame.size() && ok; ++a)
            for (std::size_t b = a; b < frame.size() && ok; ++b)
                if (pairing(j.apply(frame[a]), j.apply(frame[b]))
                    != pairing(frame[a], frame[b])) {
                    note(name + " breaks pairing orthogonality");
                    ok = false;
                }
    }

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                      .count();
    if (secs >= 60.0) {
        note("algebra suite took " + std::to_string(secs) + "s, limit 60s");
        ok = false;
    }
    return ok;
}

// -------------------------------------------------------------- criterion 2

bool criterion2() {
    auto started = std::chrono::steady_clock::now();
    bool ok = true;

    struct Case {
        ChartPtr chart;
        DiffForm eta;
    };
    for (const Case& c : {Case{chart3(), eta0()}, Case{chart5(), eta5()}}) {
        int d = c.chart->dim();
        if (contact_check(c.eta).verdict != Verdict::Pass) {
            note("contact_check not certified on dim " + std::to_string(d));
            ok = false;
            continue;
        }
        MultiVector dz_field = coord_vector(c.chart, d - 1);
        if (reeb(c.eta) != dz_field) {
            note("reeb is not @z on dim " + std::to_string(d));
            ok = false;
        }
        JacobiPair j = jacobi_from_contact(c.eta);
        if (jacobi_check(j).verdict != Verdict::Pass) {
            note("jacobi_check fails on dim " + std::to_string(d));
            ok = false;
        }
        SubBundle lj = graph_jacobi(j);
        SubBundle le = graph_omega_eta(::geolab::d(c.eta), c.eta);
        if (spans_equal_check(lj, le).verdict != Verdict::Pass) {
            note("L_eta != L_(pi, E) on dim " + std::to_string(d));
            ok = false;
        }
        if (transversality_check(lj).verdict != Verdict::Pass) {
            note("transversality certificate not constant on dim " + std::to_string(d));
            ok = false;
        }
        KernelLine kl = kernel_line(lj);
        E1Section expect = E1Section::from_vec(dz_field, Scalar())
                         + E1Section::from_form(DiffForm(c.chart, 1), Scalar(-1));
        if (kl.result.verdict != Verdict::Pass || !kl.generator || *kl.generator != expect) {
            note("kernel_line generator is not (@z, 0) + (0, -1) on dim "
                 + std::to_string(d));
            ok = false;
        }
    }

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                      .count();
    if (secs >= 10.0) {
        note("contact pipeline took " + std::to_string(secs) + "s, limit 10s");
        ok = false;
    }
    return ok;
}

// -------------------------------------------------------------- criterion 3

bool criterion3() {
    bool ok = true;

    // omega = d eta direction.
    SubBundle good = graph_omega_eta(d(eta0()), eta0());
    if (!passed(integrability_check(good))) {
        note("graph of (d eta0, eta0) is not integrable");
        ok = false;
    }
    CheckResult bad = integrability_check(graph_omega_eta(wedge(dx(), dy()), dz()));
    if (bad.verdict != Verdict::Fail || bad.witness.empty()
        || bad.witness[0].find("residual") == std::string::npos) {
        note("graph of (dx^dy, dz) must fail with a residual witness");
        ok = false;
    }

    // Jacobi direction.
    JacobiPair oracle(wedge(ex() + sy() * ez(), ey()), ez());
    JacobiPair broken(oracle.pi, MultiVector(chart3(), 1));
    bool oracle_jacobi = passed(jacobi_check(oracle));
    bool oracle_graph = passed(integrability_check(graph_jacobi(oracle)));
    bool broken_jacobi = passed(jacobi_check(broken));
    bool broken_graph = passed(integrability_check(graph_jacobi(broken)));
    if (!(oracle_jacobi && oracle_graph)) {
        note("oracle pair: jacobi_check and graph integrability must both pass");
        ok = false;
    }
    if (broken_jacobi || broken_graph) {
        note("(pi, 0): jacobi_check and graph integrability must both fail");
        ok = false;
    }
    return ok;
}

// -------------------------------------------------------------- criterion 4

bool criterion4() {
    bool ok = true;
    struct Case {
        AlmostContact a;
        bool want;
    };
    for (const Case& c : {Case{ac_product(), true}, Case{ac_contact(), true},
                          Case{ac_warped(), false}}) {
        CheckResult nr = normality_check(c.a);
        bool normal = passed(nr);
        bool integrable = passed(integrability_check(gac_from_almost_contact(c.a).second));
        if (normal != c.want || integrable != c.want) {
            note("normality/integrability mismatch (expected "
                 + std::string(c.want ? "pass" : "fail") + ")");
            ok = false;
        }
        if (!c.want) {
            if (nr.witness.empty()
                || nr.witness[0]
                       != "(N_phi + d eta (x) xi)(@x, @z) = ((-1)/(z + 1))*@x") {
                note("missing the -(1+z)^{-1} @x witness on the pair (@x, @z)");
                ok = false;
            }
        }
    }
    return ok;
}

// -------------------------------------------------------------- criterion 5

bool criterion5() {
    bool ok = true;
    for (const AlmostContact& a : {ac_product(), ac_contact()}) {
        if (lemma_identities_check(a).verdict != Verdict::Pass) {
            note("a Lemma identity fails on a normal example");
            ok = false;
        }
    }
    return ok;
}

// -------------------------------------------------------------- criterion 6

bool criterion6() {
    bool ok = true;
    auto [j, bundle] = gac_from_cosymplectic(cos_product());
    if (endo_check(j).verdict != Verdict::Pass) {
        note("cosymplectic J fails endo_check");
        ok = false;
    }
    if (spans_equal_check(bundle, eigenbundle(j, true)).verdict != Verdict::Pass) {
        note("cosymplectic eigenbundle does not match the generator set");
        ok = false;
    }
    if (integrability_check(bundle).verdict != Verdict::Fail) {
        note("(dx^dy, dz) bundle must not be integrable");
        ok = false;
    }
    auto [j2, bundle2] = gac_from_cosymplectic(cos_contact());
    if (!passed(integrability_check(bundle2))) {
        note("(d eta0, eta0) bundle must be integrable");
        ok = false;
    }
    return ok;
}

// -------------------------------------------------------------- criterion 7

bool criterion7() {
    bool ok = true;
    for (const auto& [name, j] : all_endos()) {
        SubBundle plus = eigenbundle(j, true);
        SubBundle minus = eigenbundle(j, false);
        if (!passed(isotropy_check(plus))) {
            note(name + ": +i eigenbundle is not maximally isotropic");
            ok = false;
        }
        if (!passed(spans_equal_check(plus.conjugate(), minus))) {
            note(name + ": conjugate of the +i eigenbundle is not the -i eigenbundle");
            ok = false;
        }
        if (!passed(direct_sum_check(plus))) {
            note(name + ": E + conj(E) does not fill the fiber");
            ok = false;
        }
    }
    return ok;
}

// -------------------------------------------------------------- criterion 8

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<fs::path> geo_files(const fs::path& dir) {
    std::vector<fs::path> out;
    if (fs::exists(dir))
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.is_regular_file() && entry.path().extension() == ".geo")
                out.push_back(entry.path());
    std::sort(out.begin(), out.end());
    return out;
}

bool criterion8() {
    bool ok = true;
    fs::path root(GEOLAB_SCENES_DIR);

    struct Group {
        fs::path dir;
        int want_exit;
    };
    int round_tripped = 0;
    for (const Group& g : {Group{root, 0}, Group{root / "failing", 1}}) {
        for (const fs::path& p : geo_files(g.dir)) {
            std::string text = slurp(p);
            Scene once, twice;
            try {
                once = parse_scene(text);
                twice = parse_scene(print_scene(once));
            } catch (const ParseError& err) {
                note(p.filename().string() + ": unexpected parse error: " + err.what());
                ok = false;
                continue;
            }
            if (!scene_equal(once, twice)) {
                note(p.filename().string() + ": round trip is not a fixpoint");
                ok = false;
            }
            ++round_tripped;

            Report r1 = run_checks(once, 2024, 3);
            Report r2 = run_checks(once, 2024, 3);
            if (emit_report(r1, true) != emit_report(r2, true)) {
                note(p.filename().string() + ": JSON not byte-stable for a fixed seed");
                ok = false;
            }
            if (report_exit_code(r1, false) != g.want_exit) {
                note(p.filename().string() + ": expected exit "
                     + std::to_string(g.want_exit) + ", got "
                     + std::to_string(report_exit_code(r1, false)));
                ok = false;
            }
        }
    }
    if (round_tripped < 10) {
        note("scene corpus has " + std::to_string(round_tripped)
             + " entries, need at least 10");
        ok = false;
    }

    int malformed = 0;
    for (const fs::path& p : geo_files(root / "bad")) {
        try {
            parse_scene(slurp(p));
            note(p.filename().string() + ": malformed scene parsed cleanly");
            ok = false;
        } catch (const ParseError& err) {
            if (err.pos().line < 1 || err.pos().col < 1) {
                note(p.filename().string() + ": parse error lacks a position");
                ok = false;
            }
            ++malformed;
        }
    }
    if (malformed != 5) {
        note("expected 5 malformed scenes, saw " + std::to_string(malformed));
        ok = false;
    }
    return ok;
}

template <class F> bool guarded(F&& f, const char* what) {
    try {
        return f();
    } catch (const std::exception& err) {
        note(std::string(what) + " raised: " + err.what());
        return false;
    }
}

} // namespace

int main() {
    report(1, "algebra suite (d~^2 = 0, self-bracket, Loday, pairing orthogonality)",
           guarded(criterion1, "criterion 1"));
    report(2, "contact pipeline on R^3 and R^5",
           guarded(criterion2, "criterion 2"));
    report(3, "iff corpus for graph integrability",
           guarded(criterion3, "criterion 3"));
    report(4, "normality iff integrability with the warped witness",
           guarded(criterion4, "criterion 4"));
    report(5, "Lemma identities on every normal example",
           guarded(criterion5, "criterion 5"));
    report(6, "cosymplectic endomorphism, eigenbundle and integrability",
           guarded(criterion6, "criterion 6"));
    report(7, "eigenbundle/endomorphism correspondence for every constructed J",
           guarded(criterion7, "criterion 7"));
    report(8, "parser round trip, positioned errors, exit codes, byte-stable JSON",
           guarded(criterion8, "criterion 8"));
    return g_failures == 0 ? 0 : 1;
}
