#pragma once

#include "lrmt/engine.hpp"
#include "lrmt/landscape.hpp"
#include "lrmt/rational.hpp"
#include "lrmt/window.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace lrmt {

/// Image of a tape under zeta: a part set, the leftover digits, and a
/// grounded landscape (nullopt for the empty landscape).
struct ZetaCode {
    std::vector<std::uint32_t> parts;  ///< A = pi(F_{-2}), ascending
    Word payload;
    std::optional<DecoratedLandscape> landscape;
};

/// Quantities produced while encoding, used by the digit-count checks.
struct ZetaDiagnostics {
    RunTrace trace;
    std::optional<Window> window;
    VertexSet inner2;                ///< F_{-2}
    VertexSet inner3;                ///< F_{-3}
    std::size_t forest_in_window = 0;  ///< N2 = |V(K)|
    std::size_t forest_over_inner3 = 0;
    std::uint64_t used_digits = 0;   ///< sum of h_k over F_{-2}
};

/// Encoder and decoder for a fixed long Moser-Tardos tuple. Windows are
/// measured in the symmetrised variable graph.
class ZetaCodec {
public:
    /// Throws PreconditionError unless pi is 3n-sparse and the growth
    /// condition max |B(y, 3n)| < (1 + eps)^n holds.
    ZetaCodec(std::shared_ptr<const Engine> engine, Assignment f, Rational eps, std::uint32_t n);

    /// Uses the least n satisfying the growth condition.
    ZetaCodec(std::shared_ptr<const Engine> engine, Assignment f, Rational eps);

    const Engine& engine() const { return *engine_; }
    std::uint32_t n() const { return n_; }
    const Rational& eps() const { return eps_; }

    /// `tape` must be finite; its width is k.
    ZetaCode encode(const RandomTape& tape, ZetaDiagnostics* diagnostics = nullptr) const;

    /// Inverse of encode for tapes of width k. Throws ParseError if the code
    /// is inconsistent (wrong payload length, unknown parts, ...).
    RandomTape decode(const ZetaCode& code, std::size_t k) const;

private:
    std::shared_ptr<const Engine> engine_;
    Assignment f_;
    Rational eps_;
    std::uint32_t n_ = 0;
    SymGraph metric_;
};

}  // namespace lrmt
