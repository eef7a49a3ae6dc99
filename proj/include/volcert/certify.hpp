#ifndef VOLCERT_CERTIFY_HPP
#define VOLCERT_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "volcert/bounds.hpp"
#include "volcert/interval.hpp"

namespace volcert {

enum class Verdict { Certified, Falsified, Inconclusive };

std::string verdict_name(Verdict v);

enum class LemmaId {
    Borbounds,
    MonotoneE,
    Table1,
    Table2,
    L2TwiceL1,
    No111,
    UniqueL1Threshold,
    NoBoundaryCross,
    TailMonotone,
    Theorem689Window,
};

std::string lemma_name(LemmaId id);
std::optional<LemmaId> lemma_from_name(const std::string& name);
std::vector<LemmaId> all_lemmas();

struct CertifyConfig {
    int max_depth = 40;
    int row_pieces = 256;     // uniform refinement of each table row
    int threads = 1;
    double tie_tol = 1e-6;
    double printed_tol = 1e-3;  // published values truncate after three places
    double clamp_tol = kDefaultClampTol;
    double ncb_cosh_d_lo = 1.001;  // lower end of the noboundarycross sweep

    std::string digest() const;
};

struct Piece {
    Interval c1;
    Interval bound;
    std::string kind;
};

struct Certificate {
    std::string claim_id;
    std::string config_digest;
    Verdict status = Verdict::Inconclusive;
    int depth_used = 0;
    std::vector<Piece> pieces;

    std::string to_json() const;
};

// One verified table row: the printed values (valid three-place-truncated
// lower bounds) next to the recomputed certified bounds.
struct TableRow {
    std::string c1_lo_text;
    std::string c1_hi_text;
    Interval c1_range;

    double printed_muffin = 0;
    double printed_area = 0;
    double printed_h = 0;
    double printed_vol = 0;
    QuantityId printed_label = QuantityId::A;

    double muffin_lb = 0;  // certified lower bounds over the row range
    double area_lb = 0;
    double h_lb = 0;
    double vol_lb = 0;
    std::vector<QuantityId> h_active;

    // H recomputed without the l1/2 floor in the l2 bound, reported when it
    // differs from h_lb beyond tie tolerance.
    double h_lb_unfloored = 0;

    bool passed = false;
    std::string failure;  // offending column, when failed
};

struct TableResult {
    int table_id = 0;
    std::vector<TableRow> rows;
    Certificate cert;
};

struct Witness {
    std::string name;
    Interval value;
};

struct LemmaReport {
    LemmaId id;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<Witness> witnesses;
    std::string detail;
};

// Recomputes the printed rows of Table 1 (18 rows) or Table 2 (4 rows):
// every column lower bound must reach printed - printed_tol, every row's
// volume bound must exceed 6.89.
TableResult verify_table(int table_id, const CertifyConfig& cfg = {});

// Adaptive bisection of km_volume_lower over [c1_lo, c1_hi]: certified iff
// every leaf has bound > target; a midpoint evaluation with upper bound
// <= target falsifies; hitting max_depth leaves the claim inconclusive.
Certificate certify_window(double target, double c1_lo, double c1_hi,
                           const CertifyConfig& cfg = {});

struct TailResult {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<Witness> witnesses;
    Certificate cert;
};

// Certifies that the muffin-plus-collar volume at cosh l1 = 1.439 already
// exceeds 6.89 and keeps growing beyond: V(1.439) > 6.89, Q(1.439) < 0,
// dQ < 0 and d(cosh R) < 0 on a sweep, cosh R(1.439) < 2 with R decreasing.
TailResult certify_tail(const CertifyConfig& cfg = {});

LemmaReport certify_lemma(LemmaId id, const CertifyConfig& cfg = {});

// Certified lower bound for the minimum of f over range, by taking the min
// of natural-extension lower bounds over `pieces` uniform subintervals.
template <typename F>
double min_lower_bound(F&& f, const Interval& range, int pieces) {
    if (pieces <= 1) return f(range).lo();
    double best = 0.0;
    double lo = range.lo(), hi = range.hi();
    double step = (hi - lo) / pieces;
    double cur = lo;
    for (int i = 0; i < pieces; ++i) {
        double nxt = (i + 1 == pieces) ? hi : cur + step;
        Interval piece = Interval::make(cur, nxt);
        double v = f(piece).lo();
        if (i == 0 || v < best) best = v;
        cur = nxt;
    }
    return best;
}

}  // namespace volcert

#endif
