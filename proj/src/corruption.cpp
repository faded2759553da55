#include "cdae/corruption.hpp"

#include <algorithm>
#include <numeric>

namespace cdae {

std::string to_string(CorruptionKind k) {
    switch (k) {
        case CorruptionKind::none: return "none";
        case CorruptionKind::gaussian: return "gaussian";
        case CorruptionKind::mask_indices: return "mask_indices";
        case CorruptionKind::mask_fraction: return "mask_fraction";
    }
    return "none";
}

CorruptionKind corruption_kind_from_string(const std::string& s) {
    if (s == "none") return CorruptionKind::none;
    if (s == "gaussian") return CorruptionKind::gaussian;
    if (s == "mask_indices") return CorruptionKind::mask_indices;
    if (s == "mask_fraction") return CorruptionKind::mask_fraction;
    throw ConfigError("unknown corruption kind '" + s + "'");
}

CorruptionSpec CorruptionSpec::gaussian(double sigma) {
    CorruptionSpec s;
    s.kind = CorruptionKind::gaussian;
    s.sigma = sigma;
    s.validate();
    return s;
}

CorruptionSpec CorruptionSpec::mask_indices(std::size_t start, std::size_t stride) {
    CorruptionSpec s;
    s.kind = CorruptionKind::mask_indices;
    s.start = start;
    s.stride = stride;
    s.validate();
    return s;
}

CorruptionSpec CorruptionSpec::mask_fraction(double fraction) {
    CorruptionSpec s;
    s.kind = CorruptionKind::mask_fraction;
    s.fraction = fraction;
    s.validate();
    return s;
}

void CorruptionSpec::validate() const {
    switch (kind) {
        case CorruptionKind::none:
            break;
        case CorruptionKind::gaussian:
            if (!(sigma > 0.0))
                throw ConfigError("gaussian corruption requires sigma > 0, got " +
                                  std::to_string(sigma));
            break;
        case CorruptionKind::mask_indices:
            if (stride < 1) throw ConfigError("mask_indices requires stride >= 1");
            break;
        case CorruptionKind::mask_fraction:
            if (fraction < 0.0 || fraction > 1.0)
                throw ConfigError("mask_fraction requires fraction in [0,1], got " +
                                  std::to_string(fraction));
            break;
    }
}

Vector corrupt(const CorruptionSpec& spec, const Vector& x, SeededRng& rng) {
    spec.validate();
    switch (spec.kind) {
        case CorruptionKind::none:
            return x;
        case CorruptionKind::gaussian: {
            Vector out(x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                out[i] = x[i] + spec.sigma * rng.normal();
            return out;
        }
        case CorruptionKind::mask_indices: {
            if (spec.start >= x.size())
                throw IndexError("mask_indices start " + std::to_string(spec.start) +
                                 " out of bounds for dimension " + std::to_string(x.size()));
            Vector out = x;
            for (std::size_t i = spec.start; i < out.size(); i += spec.stride) out[i] = 0.0;
            return out;
        }
        case CorruptionKind::mask_fraction: {
            const auto d = x.size();
            const auto k = static_cast<std::size_t>(spec.fraction * static_cast<double>(d));
            Vector out = x;
            // Partial Fisher-Yates: the first k entries of the permutation
            // are the masked positions.
            std::vector<std::size_t> idx(d);
            std::iota(idx.begin(), idx.end(), std::size_t{0});
            for (std::size_t i = 0; i < k; ++i) {
                const std::size_t j = i + rng.below(d - i);
                std::swap(idx[i], idx[j]);
                out[idx[i]] = 0.0;
            }
            return out;
        }
    }
    return x;
}

}  // namespace cdae
