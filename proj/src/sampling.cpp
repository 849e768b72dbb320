#include "iwa/sampling.hpp"

#include "iwa/hodge.hpp"
#include "iwa/structure.hpp"

namespace iwa {

GScalar sample_scalar(Rng& rng, const SamplerConfig& cfg) {
    auto rat = [&] {
        long num = long(rng.below(2 * cfg.max_numerator + 1)) - cfg.max_numerator;
        long den =
            long(rng.below(uint64_t(cfg.max_denominator - cfg.min_denominator + 1))) +
            cfg.min_denominator;
        return mpq_class(num, den);
    };
    return GScalar(rat(), rat());
}

namespace {

bool admissible(const ParamPoint& t) {
    try {
        ComplexStructure J(t);
        if (sigma_from_frame(J).s12.is_zero()) return false;
        Metric::omega11_on_x0(t);
    } catch (const FrameSingular&) {
        return false;
    } catch (const NotPositive&) {
        return false;
    } catch (const StructureEquationViolation&) {
        return false;
    }
    return true;
}

}  // namespace

std::vector<ParamPoint> sample_essential_points(size_t count, const SamplerConfig& cfg,
                                                int klass) {
    Rng rng(cfg.seed);
    std::vector<ParamPoint> out;
    while (out.size() < count) {
        ParamPoint t;
        if (klass == 2) {
            // D(t) = 0 with a nonzero base block: (t11, t12) row times scale.
            t.t_at(1, 1) = sample_scalar(rng, cfg);
            t.t_at(1, 2) = sample_scalar(rng, cfg);
            if (rng.below(2) == 0) {
                // second row proportional to the first keeps the determinant zero
                GScalar lam(long(rng.below(3)), 4);
                t.t_at(2, 1) = lam * t.t_at(1, 1);
                t.t_at(2, 2) = lam * t.t_at(1, 2);
            }
        } else {
            t.t_at(1, 1) = sample_scalar(rng, cfg);
            t.t_at(1, 2) = sample_scalar(rng, cfg);
            t.t_at(2, 1) = sample_scalar(rng, cfg);
            t.t_at(2, 2) = sample_scalar(rng, cfg);
        }
        if (klass >= 0 && nakamura_class(t) !=
                              (klass == 2 ? NakamuraClass::ClassII : NakamuraClass::ClassIII))
            continue;
        if (!admissible(t)) continue;
        out.push_back(t);
    }
    return out;
}

std::vector<ParamPoint> sample_full_points(size_t count, const SamplerConfig& cfg) {
    Rng rng(cfg.seed ^ 0x5bf0367551f2a9e3ULL);
    std::vector<ParamPoint> out;
    while (out.size() < count) {
        ParamPoint t;
        for (int i = 0; i < 6; ++i) t.t[i] = sample_scalar(rng, cfg);
        if (!admissible(t)) continue;
        out.push_back(t);
    }
    return out;
}

}  // namespace iwa
