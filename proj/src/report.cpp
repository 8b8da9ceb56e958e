#include "tracecode/report.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "tracecode/bitkernels.hpp"
#include "tracecode/quadform.hpp"
#include "tracecode/scenarios.hpp"
#include "tracecode/subcode_builder.hpp"

namespace tracecode::report {

namespace {

Field make_field(int m, const Options& opt) {
    return opt.modulus ? Field(m, *opt.modulus) : Field(m);
}

std::string default_preset(Family fam, const Field& field) {
    if (fam == Family::even2) return "f4-element";
    (void)field;
    return "generic";
}

// The a-tuple to solve with: an explicit hex list wins over a preset name.
std::vector<std::uint32_t> choose_tuple(const Field& field, const Options& opt,
                                        const std::string& preset, int big_m) {
    if (opt.a_tuple.empty()) return preset_tuple(field, preset, big_m);
    std::vector<std::uint32_t> a;
    a.reserve(opt.a_tuple.size());
    for (const std::string& hex : opt.a_tuple) a.push_back(field.elem_from_hex(hex));
    return a;
}

std::vector<std::string> tuple_hex(const Field& field, std::span<const std::uint32_t> t) {
    std::vector<std::string> out;
    out.reserve(t.size());
    for (std::uint32_t x : t) out.push_back(field.elem_hex(x));
    return out;
}

std::uint32_t random_element(std::mt19937_64& rng, const Field& f) {
    return static_cast<std::uint32_t>(rng() & (f.q() - 1));
}

LinearizedPoly random_poly(std::mt19937_64& rng, const Field& f, int h) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(h) + 1);
    for (std::uint32_t& x : c) x = random_element(rng, f);
    return LinearizedPoly(f, std::move(c));
}

} // namespace

const char* wirtz_interval(std::uint64_t q, std::int64_t genus) {
    struct Entry {
        std::uint64_t q;
        std::int64_t g;
        const char* interval;
    };
    static constexpr Entry kTable[] = {
        {64, 2, "97"},       {64, 5, "101-145"},  {64, 6, "155-161"},  {64, 10, "139-225"},
        {128, 2, "184-195"}, {128, 6, "225-261"}, {128, 9, "209-327"}, {128, 14, "289-437"},
        {128, 30, "369-789"},
    };
    for (const Entry& e : kTable)
        if (e.q == q && e.g == genus) return e.interval;
    return nullptr;
}

TableReport run_table(int m, int h, const Options& opt) {
    Field field = make_field(m, opt);
    Family fam = family_for(field, h);
    if (opt.case_override && *opt.case_override != family_name(fam))
        throw InvalidArgument("m=" + std::to_string(m) + ", h=" + std::to_string(h) + " is case " +
                              family_name(fam) + ", not case " + *opt.case_override);

    TableReport rep;
    rep.m = m;
    rep.modulus = field.modulus();
    rep.h = h;
    rep.case_name = family_name(fam);
    rep.preset = !opt.a_tuple.empty() ? "custom"
                 : opt.preset.empty() ? default_preset(fam, field)
                                      : opt.preset;

    int big_m = (m - (m % 2 ? 2 * h - 1 : 2 * h)) / 2;
    PairSystem sys = build_system(choose_tuple(field, opt, rep.preset, big_m), h, field);
    rep.dim_s = static_cast<int>(sys.solutions.dim());
    rep.dim_v = static_cast<int>(sys.projection.dim());
    rep.big_m = sys.M;
    rep.max_r = sys.max_r();
    rep.d1 = *min_weight_formula(field, h);

    int rmax = opt.rmax.value_or(std::min(rep.max_r, 4));
    if (rmax < 1 || rmax > rep.max_r)
        throw InvalidArgument("requested " + std::to_string(rmax) + " rows, the system supports max r = " +
                              std::to_string(rep.max_r));

    rep.all_pass = true;
    for (int r = 1; r <= rmax; ++r) {
        CurveSummary closed = table_row(fam, r, field, rep.max_r);
        CurveSummary built = fibre_product(min_weight_subcode(sys, r));
        TableRowOut row;
        row.r = r;
        row.genus = closed.genus;
        row.n_points = closed.n_points;
        row.serre_bound = closed.serre_bound;
        row.attains_serre = closed.attains_serre;
        row.attains_hasse_weil = closed.attains_hasse_weil;
        if (const char* wz = wirtz_interval(field.q(), closed.genus)) row.wirtz = wz;
        row.built_genus = built.genus;
        row.built_n_points = built.n_points;
        row.constructive_match = built.genus == closed.genus && built.n_points == closed.n_points;
        if (!row.constructive_match) rep.all_pass = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

GhwReport run_ghw(int m, int h, const Options& opt) {
    Field field = make_field(m, opt);
    auto d1 = min_weight_formula(field, h);
    if (!d1)
        throw InvalidArgument("no minimum-weight construction for m=" + std::to_string(m) +
                              ", h=" + std::to_string(h));

    GhwReport rep;
    rep.m = m;
    rep.modulus = field.modulus();
    rep.h = h;
    rep.d1 = *d1;
    rep.all_pass = true;

    std::uint64_t kbits = static_cast<std::uint64_t>(h + 1) * static_cast<std::uint64_t>(m);
    bool sweep_fits = kbits < 63 && (std::uint64_t{1} << kbits) <= opt.max_ops;
    if (sweep_fits) {
        // throws if the sweep disagrees with the closed form
        rep.d1 = min_weight_exhaustive(field, h, SweepOptions{opt.max_ops, opt.jobs});
        rep.d1_exhaustive_confirmed = true;
    } else if (opt.exhaustive) {
        throw CostGuardExceeded("d_1 sweep over 2^" + std::to_string(kbits) +
                                " words exceeds the operation budget");
    }

    int big_m = (m - (m % 2 ? 2 * h - 1 : 2 * h)) / 2;
    std::string preset = opt.preset;
    if (preset.empty())
        preset = (m % 2 == 0 && big_m == 2 && m >= 6) ? "f4-element" : "generic";
    PairSystem sys = build_system(choose_tuple(field, opt, preset, big_m), h, field);
    rep.dim_s = static_cast<int>(sys.solutions.dim());
    rep.dim_v = static_cast<int>(sys.projection.dim());
    rep.big_m = sys.M;
    rep.max_r = sys.max_r();
    rep.a_tuple = tuple_hex(field, sys.a);
    if (rep.max_r >= 1)
        for (const std::vector<std::uint32_t>& b : select_representatives(sys, rep.max_r))
            rep.witness_b.push_back(tuple_hex(field, b));

    for (int r = 1; r <= rep.max_r; ++r) {
        GhwRung rung;
        rung.r = r;
        rung.d_r = ghw_from_min_subcode(rep.d1, r);
        PolySubcode witness = min_weight_subcode(sys, r); // throws unless all words have weight d1
        rung.witness_checked = true;
        if (r == rep.max_r) {
            for (const LinearizedPoly& p : witness.basis()) rep.witness_basis.push_back(p.coeffs_hex());
            witness.for_each_nonzero_word(
                [&](std::uint64_t, const BitVec&, std::uint64_t wt) { rep.witness_weights.push_back(wt); });
            std::sort(rep.witness_weights.begin(), rep.witness_weights.end());
        }
        if (opt.exhaustive && r <= 3) {
            TraceCode code(field, h);
            bool fits = gaussian_binomial(code.dim(), r) <= opt.max_ops &&
                        (r == 1 || code.length() <= 64);
            if (fits) {
                rung.exhaustive = ghw_exhaustive(field, h, r, opt.max_ops);
                if (*rung.exhaustive != rung.d_r) rep.all_pass = false;
            }
        }
        rep.ladder.push_back(std::move(rung));
    }
    return rep;
}

namespace {

// verify helpers -------------------------------------------------------------

void check(std::vector<CheckResult>& out, const std::string& name, const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    try {
        r.detail = body(); // empty detail = plain pass
        r.pass = true;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    out.push_back(std::move(r));
}

std::string check_field_axioms(const Field& f) {
    std::mt19937_64 rng(1001);
    auto pair_ok = [&](std::uint32_t x, std::uint32_t y) {
        return f.sqr(f.add(x, y)) == f.add(f.sqr(x), f.sqr(y));
    };
    if (f.m() <= 6) {
        for (std::uint32_t x = 0; x < f.q(); ++x)
            for (std::uint32_t y = 0; y < f.q(); ++y)
                if (!pair_ok(x, y)) throw InternalCheckFailure("frobenius additivity failed");
    } else {
        for (int i = 0; i < 4000; ++i)
            if (!pair_ok(random_element(rng, f), random_element(rng, f)))
                throw InternalCheckFailure("frobenius additivity failed");
    }
    for (int i = 0; i < 500; ++i) {
        std::uint32_t x = random_element(rng, f);
        if (f.mul(x, 1) != x) throw InternalCheckFailure("x*1 != x");
        if (f.add(x, x) != 0) throw InternalCheckFailure("x+x != 0");
        if (f.pow(x, f.q()) != x) throw InternalCheckFailure("x^q != x");
        for (int j : {0, 1, f.m(), 2 * f.m() + 3})
            if (f.inv_frobenius(f.frobenius(x, j), j) != x)
                throw InternalCheckFailure("inverse frobenius round trip failed");
    }
    return "";
}

std::string check_trace_balance(const Field& f) {
    std::uint64_t zeros = 0;
    for (std::uint32_t x = 0; x < f.q(); ++x) {
        if (f.trace(x) == 0) ++zeros;
        if (f.trace(f.sqr(x)) != f.trace(x))
            throw InternalCheckFailure("trace not frobenius-invariant");
    }
    if (zeros != f.q() / 2) throw InternalCheckFailure("trace is not balanced");
    std::mt19937_64 rng(1002);
    for (int i = 0; i < 500; ++i) {
        std::uint32_t x = random_element(rng, f), y = random_element(rng, f);
        if (f.trace(f.add(x, y)) != (f.trace(x) ^ f.trace(y)))
            throw InternalCheckFailure("trace not additive");
    }
    return "traces split " + std::to_string(zeros) + "/" + std::to_string(f.q() - zeros);
}

std::string check_linalg(const Field& f) {
    std::mt19937_64 rng(1003 + static_cast<std::uint64_t>(f.m()));
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 2 + rng() % 8, cols = 2 + rng() % 10;
        F2Matrix mat(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) mat.set(i, j, rng() & 1);
        std::size_t rk = rank(mat);
        F2Subspace ker = kernel(mat);
        if (rk + ker.dim() != cols) throw InternalCheckFailure("rank + nullity mismatch");
        for (const BitVec& v : ker.basis())
            if (!mat.apply(v).is_zero()) throw InternalCheckFailure("kernel vector not annihilated");
        F2Subspace rs = row_space(mat);
        std::vector<BitVec> again = rs.basis();
        if (!(F2Subspace::span_of(again, cols).basis() == rs.basis()))
            throw InternalCheckFailure("row reduction is not idempotent");
    }
    return "";
}

int max_h_for(const Field& f) { return std::min(3, f.m() / 2); }

std::string check_classification(const Field& f) {
    std::mt19937_64 rng(1004 + static_cast<std::uint64_t>(f.m()));
    int tested = 0;
    for (int h = 1; h <= max_h_for(f); ++h) {
        for (int i = 0; i < 200; ++i) {
            QuadraticForm q = QuadraticForm::from_poly(random_poly(rng, f, h));
            FormClassification c = q.classify(); // internally Arf- and count-checked
            if (zero_count_exhaustive(q) != c.zeros)
                throw InternalCheckFailure("classified zeros disagree with enumeration");
            if ((f.m() - c.w) % 2) throw InternalCheckFailure("radical parity violated");
            bool even_rank = c.w0 == c.w;
            if (c.rank != f.m() - c.w + (even_rank ? 0 : 1))
                throw InternalCheckFailure("rank/radical relation violated");
            ++tested;
        }
    }
    return std::to_string(tested) + " random forms classified";
}

std::string check_word_weights(const Field& f) {
    std::mt19937_64 rng(1005 + static_cast<std::uint64_t>(f.m()));
    auto q = static_cast<std::int64_t>(f.q());
    for (int h = 1; h <= max_h_for(f); ++h)
        for (int i = 0; i < 200; ++i) {
            LinearizedPoly r = random_poly(rng, f, h);
            std::int64_t n = zero_count_exhaustive(QuadraticForm::from_poly(r));
            if (static_cast<std::int64_t>(word_of(r).weight) != q - n)
                throw InternalCheckFailure("word weight != q - N(Q)");
        }
    return "";
}

std::string check_fibre_identities(const Field& f) {
    std::mt19937_64 rng(1006 + static_cast<std::uint64_t>(f.m()));
    int h = max_h_for(f);
    int done = 0;
    for (int trial = 0; trial < 60 && done < 25; ++trial) {
        int r = 1 + static_cast<int>(rng() % 3);
        std::vector<LinearizedPoly> basis;
        for (int i = 0; i < r; ++i) {
            LinearizedPoly p = random_poly(rng, f, h);
            if (p.top_index() < 1) {
                --i;
                continue;
            }
            basis.push_back(std::move(p));
        }
        try {
            PolySubcode d(f, h, basis);
            fibre_product(d); // trace sum vs support formula checked inside
            ++done;
        } catch (const InvalidArgument&) {
            // dependent basis or a degree-1 span member; resample
        }
    }
    if (done == 0) throw InternalCheckFailure("no fibre product could be formed");
    return std::to_string(done) + " random fibre products cross-checked";
}

std::string check_builder_odd(const Field& f) {
    const int m = f.m();
    std::ostringstream os;
    for (int h = 1; h <= (m - 1) / 2; ++h) {
        int big_m = (m - 2 * h + 1) / 2;
        PairSystem sys = build_system(preset_tuple(f, "generic", big_m), h, f);
        if (sys.solutions.dim() < static_cast<std::size_t>(m))
            throw InternalCheckFailure("dim S < m for odd m");
        if (!fiber_structure_check(sys))
            throw InternalCheckFailure("fiber structure check failed at h=" + std::to_string(h));

        if (sys.solutions.dim() <= 16) {
            // full-rank propagation over every solution
            std::vector<std::uint32_t> a(sys.a);
            for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << sys.solutions.dim()); ++idx) {
                std::vector<std::uint32_t> b = unflatten_tuple(f, sys.solutions.element(idx), sys.M);
                std::vector<std::uint32_t> head(a);
                head.push_back(b[0]);
                std::vector<BitVec> hv, av;
                for (std::uint32_t x : head) hv.push_back(BitVec::from_mask(x, static_cast<std::size_t>(m)));
                if (F2Subspace::span_of(hv, static_cast<std::size_t>(m)).dim() != a.size() + 1) continue;
                std::vector<std::uint32_t> all(a);
                all.insert(all.end(), b.begin(), b.end());
                for (std::uint32_t x : all) av.push_back(BitVec::from_mask(x, static_cast<std::size_t>(m)));
                if (F2Subspace::span_of(av, static_cast<std::size_t>(m)).dim() != 2 * a.size())
                    throw InternalCheckFailure("rank propagation failed at h=" + std::to_string(h));
            }
        }
        if (sys.max_r() >= 1) min_weight_subcode(sys, sys.max_r()); // self-checking
        os << "h=" << h << ": dimS=" << sys.solutions.dim() << " dimV=" << sys.projection.dim() << "  ";
    }
    return os.str();
}

std::string check_builder_even(const Field& f) {
    const int m = f.m();
    std::ostringstream os;
    for (int h = 1; h < m / 2; ++h) {
        int big_m = (m - 2 * h) / 2;
        std::string preset = big_m == 2 && m >= 6 ? "f4-element" : "generic";
        PairSystem sys = build_system(preset_tuple(f, preset, big_m), h, f);
        if (sys.max_r() >= 1) min_weight_subcode(sys, sys.max_r());
        os << "h=" << h << ": dimS=" << sys.solutions.dim() << " dimV=" << sys.projection.dim() << "  ";
    }
    if (m >= 6) {
        std::uint32_t a2 = f4_element(f);
        std::int64_t count = even_m_solution_count(a2, f); // also checked inside
        if (m <= 8) {
            // brute-force confirmation over all pairs
            PairSystem sys = build_system({1, a2}, (m - 4) / 2, f);
            std::int64_t seen = 0;
            for (std::uint32_t b1 = 0; b1 < f.q(); ++b1)
                for (std::uint32_t b2 = 0; b2 < f.q(); ++b2) {
                    bool ok = true;
                    for (int j = sys.j_lo; j <= sys.j_hi && ok; ++j) {
                        std::uint32_t s = f.mul(f.frobenius(1, j), b1) ^ f.mul(1, f.frobenius(b1, j)) ^
                                          f.mul(f.frobenius(a2, j), b2) ^ f.mul(a2, f.frobenius(b2, j));
                        ok = s == 0;
                    }
                    if (ok) ++seen;
                }
            if (seen != count)
                throw InternalCheckFailure("enumerated solution count " + std::to_string(seen) +
                                           " != kernel count " + std::to_string(count));
        }
        os << "two-equation count=" << count;
    }
    return os.str();
}

std::string check_membership_small(const Field& f) {
    const int m = f.m();
    if (m > 6) return "skipped (m > 6)";
    int count = 0;
    for (int h = 1; h <= (m % 2 ? (m - 1) / 2 : m / 2 - 1); ++h) {
        int big_m = m % 2 ? (m - 2 * h + 1) / 2 : (m - 2 * h) / 2;
        if (big_m > 2) continue;
        PairSystem sys = build_system(preset_tuple(f, "generic", big_m), h, f);
        std::uint64_t space = std::uint64_t{1} << (big_m * m);
        for (std::uint64_t x = 0; x < space; ++x) {
            BitVec bv(static_cast<std::size_t>(big_m) * static_cast<std::size_t>(m));
            for (std::size_t bit = 0; bit < bv.size(); ++bit) bv.set(bit, (x >> bit) & 1);
            std::vector<std::uint32_t> b = unflatten_tuple(f, bv, big_m);
            bool in_s = sys.solutions.contains(bv);
            bool member = membership_check(sys.a, b, h, f);
            if (in_s != member)
                throw InternalCheckFailure("membership/solution-space mismatch at h=" + std::to_string(h));
            ++count;
        }
    }
    return std::to_string(count) + " tuples compared";
}

std::string check_combos(const Field& f) {
    std::ostringstream os;
    auto expect = [&](const ComboScenario& sc, std::int64_t g, std::int64_t n) {
        if (sc.product.genus != g || sc.product.n_points != n)
            throw InternalCheckFailure(sc.name + ": got (" + std::to_string(sc.product.genus) + ", " +
                                       std::to_string(sc.product.n_points) + "), expected (" +
                                       std::to_string(g) + ", " + std::to_string(n) + ")");
        os << sc.name << "=(" << g << "," << n << ") ";
    };
    if (f.m() == 7) {
        ComboScenario a = combo_pair_split(f);
        expect(a, 10, 289);
        if (a.product.serre_bound != 349) throw InternalCheckFailure("pair-split bound != 349");
        expect(combo_triple_split(f), 9, 241);
    } else if (f.m() == 6) {
        expect(combo_mixed_even(f), 5, 129);
        expect(combo_vanishing_word(f), 10, 193);
    }
    return os.str();
}

std::string check_kernels() {
    std::mt19937_64 rng(1007);
    const bitk::Kernels& ref = bitk::scalar();
    for (const bitk::Kernels* k : bitk::compiled()) {
        if (!bitk::runnable(*k)) continue;
        for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{3}, std::size_t{8}, std::size_t{33}}) {
            std::vector<std::uint64_t> a(n), b(n);
            for (auto& x : a) x = rng();
            for (auto& x : b) x = rng();
            std::vector<std::uint64_t> d1 = a, d2 = a;
            if (k->popcount(a.data(), n) != ref.popcount(a.data(), n) ||
                k->or_popcount(a.data(), b.data(), n) != ref.or_popcount(a.data(), b.data(), n) ||
                k->and_popcount(a.data(), b.data(), n) != ref.and_popcount(a.data(), b.data(), n) ||
                k->xor_popcount_into(d1.data(), b.data(), n) != ref.xor_popcount_into(d2.data(), b.data(), n) ||
                d1 != d2)
                throw InternalCheckFailure(std::string("kernel '") + k->name + "' diverges from scalar");
        }
    }
    return std::string("active: ") + bitk::active().name;
}

std::string check_deep_m9(const Field& f) {
    PairSystem sys = build_system(preset_tuple(f, "subfield-F8", 3), 2, f);
    if (sys.solutions.dim() != 12 || sys.projection.dim() != 9 || sys.max_r() != 6)
        throw InternalCheckFailure("subfield system dims: dimS=" + std::to_string(sys.solutions.dim()) +
                                   " dimV=" + std::to_string(sys.projection.dim()));
    min_weight_subcode(sys, 6);
    if (ghw_from_min_subcode(224, 6) != 441) throw InternalCheckFailure("d_6 ladder value wrong");
    std::uint64_t d1 = min_weight_exhaustive(f, 2);
    if (d1 != 224) throw InternalCheckFailure("swept d_1 != 224");
    return "dimS=12 dimV=9 max_r=6 d1=224";
}

} // namespace

VerifyReport run_verify(int m, const Options& opt) {
    if (m > 12) throw InvalidArgument("verify supports m <= 12");
    if (opt.deep && m > 9) throw InvalidArgument("deep verify supports m <= 9");
    Field field = make_field(m, opt);

    VerifyReport rep;
    rep.m = m;
    rep.modulus = field.modulus();
    rep.deep = opt.deep;

    check(rep.checks, "field-axioms", [&] { return check_field_axioms(field); });
    check(rep.checks, "trace-balance", [&] { return check_trace_balance(field); });
    check(rep.checks, "f2-linalg", [&] { return check_linalg(field); });
    check(rep.checks, "classification-trichotomy", [&] { return check_classification(field); });
    check(rep.checks, "word-weight-identity", [&] { return check_word_weights(field); });
    check(rep.checks, "fibre-identities", [&] { return check_fibre_identities(field); });
    if (m % 2 == 1)
        check(rep.checks, "builder-odd", [&] { return check_builder_odd(field); });
    else
        check(rep.checks, "builder-even", [&] { return check_builder_even(field); });
    check(rep.checks, "membership-exhaustive", [&] { return check_membership_small(field); });
    if (m == 6 || m == 7)
        check(rep.checks, "combination-products", [&] { return check_combos(field); });
    if (opt.deep && m == 9)
        check(rep.checks, "subfield-system-deep", [&] { return check_deep_m9(field); });
    check(rep.checks, "bit-kernels", [&] { return check_kernels(); });

    rep.all_pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                               [](const CheckResult& c) { return c.pass; });
    return rep;
}

// rendering -------------------------------------------------------------------

namespace {
ordered_json field_json(int m, std::uint32_t modulus) {
    return ordered_json{{"m", m}, {"modulus", to_hex_mask(modulus)}};
}
} // namespace

ordered_json to_json(const TableReport& r) {
    ordered_json rows = ordered_json::array();
    for (const TableRowOut& row : r.rows) {
        ordered_json j{{"r", row.r},
                       {"genus", row.genus},
                       {"n_points", row.n_points},
                       {"serre_bound", row.serre_bound},
                       {"attains_serre", row.attains_serre},
                       {"attains_hasse_weil", row.attains_hasse_weil},
                       {"constructive_match", row.constructive_match}};
        if (!row.wirtz.empty()) j["wirtz"] = row.wirtz;
        if (!row.constructive_match)
            j["constructed"] = ordered_json{{"genus", row.built_genus}, {"n_points", row.built_n_points}};
        rows.push_back(std::move(j));
    }
    return ordered_json{{"schema", 1},
                        {"command", "table"},
                        {"field", field_json(r.m, r.modulus)},
                        {"h", r.h},
                        {"case", r.case_name},
                        {"preset", r.preset},
                        {"dim_s", r.dim_s},
                        {"dim_v", r.dim_v},
                        {"M", r.big_m},
                        {"max_r", r.max_r},
                        {"d1", r.d1},
                        {"rows", std::move(rows)},
                        {"all_pass", r.all_pass}};
}

ordered_json to_json(const GhwReport& r) {
    ordered_json ladder = ordered_json::array();
    for (const GhwRung& rung : r.ladder) {
        ordered_json j{{"r", rung.r}, {"d_r", rung.d_r}, {"witness_checked", rung.witness_checked}};
        if (rung.exhaustive) j["exhaustive"] = *rung.exhaustive;
        ladder.push_back(std::move(j));
    }
    return ordered_json{{"schema", 1},
                        {"command", "ghw"},
                        {"field", field_json(r.m, r.modulus)},
                        {"h", r.h},
                        {"d1", r.d1},
                        {"d1_exhaustive_confirmed", r.d1_exhaustive_confirmed},
                        {"dim_s", r.dim_s},
                        {"dim_v", r.dim_v},
                        {"M", r.big_m},
                        {"max_r", r.max_r},
                        {"a_tuple", r.a_tuple},
                        {"ladder", std::move(ladder)},
                        {"witness", ordered_json{{"b_tuples", r.witness_b},
                                                 {"basis", r.witness_basis},
                                                 {"weights", r.witness_weights}}},
                        {"all_pass", r.all_pass}};
}

ordered_json to_json(const VerifyReport& r) {
    ordered_json checks = ordered_json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return ordered_json{{"schema", 1},
                        {"command", "verify"},
                        {"field", field_json(r.m, r.modulus)},
                        {"deep", r.deep},
                        {"checks", std::move(checks)},
                        {"all_pass", r.all_pass}};
}

std::string to_text(const TableReport& r) {
    std::ostringstream os;
    os << "C_" << r.h << " over F_{2^" << r.m << "} (mod " << to_hex_mask(r.modulus) << "), case "
       << r.case_name << ", preset " << r.preset << "\n";
    os << "dim S = " << r.dim_s << ", dim V = " << r.dim_v << ", M = " << r.big_m
       << ", max r = " << r.max_r << ", d_1 = " << r.d1 << "\n";
    os << "  r  genus  points   bound  attains  wirtz      check\n";
    for (const TableRowOut& row : r.rows) {
        char attains = row.attains_serre ? 'S' : (row.attains_hasse_weil ? 'H' : '-');
        os << "  " << row.r << "  " << std::setw(5) << row.genus << "  " << std::setw(6) << row.n_points
           << "  " << std::setw(6) << row.serre_bound << "  " << std::setw(7) << attains << "  "
           << std::setw(9) << std::left << (row.wirtz.empty() ? "-" : row.wirtz) << std::right << "  ";
        if (row.constructive_match)
            os << "ok\n";
        else
            os << "MISMATCH: constructed genus " << row.built_genus << ", points " << row.built_n_points
               << "\n";
    }
    os << (r.all_pass ? "all cross-checks passed" : "CROSS-CHECK FAILURES") << "\n";
    return os.str();
}

std::string to_text(const GhwReport& r) {
    std::ostringstream os;
    os << "generalized Hamming weights of C_" << r.h << " over F_{2^" << r.m << "} (mod "
       << to_hex_mask(r.modulus) << ")\n";
    os << "d_1 = " << r.d1 << (r.d1_exhaustive_confirmed ? " (exhaustively confirmed)" : " (closed form)")
       << ", dim S = " << r.dim_s << ", dim V = " << r.dim_v << ", max r = " << r.max_r << "\n";
    if (r.ladder.empty()) os << "no subcode constructible (dim V - M = 0)\n";
    for (const GhwRung& rung : r.ladder) {
        os << "  d_" << rung.r << " = " << rung.d_r << (rung.witness_checked ? "  [witness checked]" : "");
        if (rung.exhaustive) os << "  [exhaustive: " << *rung.exhaustive << "]";
        os << "\n";
    }
    os << (r.all_pass ? "all cross-checks passed" : "CROSS-CHECK FAILURES") << "\n";
    return os.str();
}

std::string to_text(const VerifyReport& r) {
    std::ostringstream os;
    os << "verify F_{2^" << r.m << "} (mod " << to_hex_mask(r.modulus) << ")" << (r.deep ? " [deep]" : "")
       << "\n";
    for (const CheckResult& c : r.checks) {
        os << (c.pass ? "  PASS  " : "  FAIL  ") << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    os << (r.all_pass ? "all checks passed" : "CHECK FAILURES") << "\n";
    return os.str();
}

std::string to_csv(const TableReport& r) {
    std::ostringstream os;
    os << "r,genus,n_points,serre_bound,attains_serre,attains_hasse_weil,wirtz,constructive_match\n";
    for (const TableRowOut& row : r.rows)
        os << row.r << ',' << row.genus << ',' << row.n_points << ',' << row.serre_bound << ','
           << (row.attains_serre ? 1 : 0) << ',' << (row.attains_hasse_weil ? 1 : 0) << ','
           << (row.wirtz.empty() ? "-" : row.wirtz) << ',' << (row.constructive_match ? 1 : 0) << "\n";
    return os.str();
}

} // namespace tracecode::report
