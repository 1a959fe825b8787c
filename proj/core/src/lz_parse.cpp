#include "lzbg/lz_parse.hpp"

#include "lzbg/conversions.hpp"
#include "lzbg/phi_builder.hpp"
#include "lzbg/sa_induce.hpp"
#include "lzbg/workspace.hpp"

#include <chrono>
#include <optional>

namespace lzbg {

namespace {

using Clock = std::chrono::steady_clock;

class PhaseTimer {
public:
    PhaseTimer(std::string_view name, double& sink) : scope_(name), sink_(sink) {}
    ~PhaseTimer() {
        sink_ += std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    }

private:
    PhaseScope scope_;
    double& sink_;
    Clock::time_point start_ = Clock::now();
};

void parse_tail(Workspace& ws, FactorParser& parser, PipelineStats& st) {
    {
        PhaseTimer timer("nsv", st.t_nsv_ms);
        phi_to_nsv_inplace(ws);
    }
    PhaseTimer timer("parse", st.t_parse_ms);
    FixedCharge table(FactorParser::kTableWords);
    nsv_to_phi_with_visitor(ws, parser);
}

} // namespace

std::string_view variant_name(Variant v) {
    switch (v) {
    case Variant::BGoneT: return "bgone-t";
    case Variant::BGoneSA: return "bgone-sa";
    case Variant::BGtwo: return "bgtwo";
    case Variant::Kkp3Ref: return "kkp3-ref";
    }
    return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
    for (Variant v : kAllVariants)
        if (variant_name(v) == name) return v;
    return std::nullopt;
}

int array_count(Variant v) {
    switch (v) {
    case Variant::BGoneT:
    case Variant::BGoneSA: return 1;
    case Variant::BGtwo: return 2;
    case Variant::Kkp3Ref: return 3;
    }
    return 0;
}

Factorization factorize(const Text& t, Variant variant, PipelineStats* stats) {
    const std::size_t n = t.size();
    Factorization f;
    f.n = n;
    Workspace ws(n);

    PipelineStats local;
    PipelineStats& st = stats ? *stats : local;
    st = PipelineStats{};
    std::optional<SpaceAccountant> acc;
    if (stats) acc.emplace();

    FactorParser parser(t, f.factors);
    const auto start = Clock::now();
    switch (variant) {
    case Variant::BGoneT: {
        LmsIndex lms;
        {
            PhaseTimer timer("sa", st.t_sa_ms);
            lms = sort_lms_suffixes(t, ws);
        }
        {
            PhaseTimer timer("phi", st.t_phi_ms);
            induce_phi_from_links(t, ws, rearrange_lms_to_links(ws, lms.k));
        }
        parse_tail(ws, parser, st);
        break;
    }
    case Variant::BGoneSA: {
        {
            PhaseTimer timer("sa", st.t_sa_ms);
            build_suffix_array(t, ws);
        }
        {
            PhaseTimer timer("phi", st.t_phi_ms);
            sa_to_phi_inplace(t, ws);
        }
        parse_tail(ws, parser, st);
        break;
    }
    case Variant::BGtwo: {
        {
            PhaseTimer timer("sa", st.t_sa_ms);
            build_suffix_array(t, ws);
        }
        std::optional<Workspace> phi;
        {
            PhaseTimer timer("phi", st.t_phi_ms);
            phi.emplace(n);
            word_t* out = phi->data();
            const word_t* sa = ws.data();
            out[0] = n == 0 ? 0 : sa[n];
            if (n > 0) out[sa[1]] = 0;
            for (std::size_t i = 2; i <= n; ++i) out[sa[i]] = sa[i - 1];
            phi->set_state(WorkspaceState::Phi);
        }
        parse_tail(*phi, parser, st);
        break;
    }
    case Variant::Kkp3Ref: {
        {
            PhaseTimer timer("sa", st.t_sa_ms);
            build_suffix_array(t, ws);
        }
        std::vector<word_t> psv, nsv;
        {
            PhaseTimer timer("nsv", st.t_nsv_ms);
            psv.resize(n + 1);
            nsv.resize(n + 1);
            sa_to_psv_nsv(ws, psv, nsv);
        }
        PhaseTimer timer("parse", st.t_parse_ms);
        FixedCharge table(FactorParser::kTableWords);
        while (!parser.done()) {
            const word_t i = parser.next_start();
            parser.feed(i, psv[i], nsv[i]);
        }
        break;
    }
    }
    st.t_total_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    st.cost = parser.cost();
    if (acc) st.space = acc->report();
    return f;
}

} // namespace lzbg
