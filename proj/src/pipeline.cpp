#include "egh/pipeline.hpp"

#include "egh/errors.hpp"

namespace egh {

EghResult egh_pipeline(const Ideal& I, std::mt19937_64& rng, int max_steps) {
    if (I.is_unit() || I.is_zero()) throw Error("pipeline needs a proper nonzero ideal");
    if (!I.artinian()) throw Error("pipeline input must be Artinian");
    const int n = I.ring()->nvars();

    ContainmentResult contained = minimal_containment_degrees(I, n, rng);
    LinkChain chain = minimally_licci_chain(I, rng, max_steps);

    EghResult result{false,
                     "",
                     std::move(contained.degrees),
                     std::move(chain),
                     std::nullopt,
                     I.hilbert(),
                     HilbertFunction::artinian({})};

    const std::vector<CIType> types = result.chain.types();
    if (!result.chain.sequentially_bounded) {
        std::string listing;
        for (const auto& t : types) listing += (listing.empty() ? "" : ";") + t.to_string();
        result.failure = "chain types are not componentwise nonincreasing: " + listing;
        return result;
    }
    const CIType& first = types.front();
    if (!(first == result.e)) {
        result.failure = "first link type (" + first.to_string() +
                         ") differs from the minimal containment degrees (" +
                         result.e.to_string() + ")";
        return result;
    }

    MonomialIdeal witness = witness_ideal(result.chain.type_chain(), I.ring());
    result.hf_witness = witness.hilbert();
    result.witness = std::move(witness);

    for (int i = 0; i < n; ++i)
        if (!result.witness->contains(Monomial::var(n, i, result.e[i]))) {
            result.failure = "witness misses x" + std::to_string(i + 1) + "^" +
                             std::to_string(result.e[i]);
            return result;
        }
    if (!(result.hf_witness == result.hf_input)) {
        result.failure = "witness Hilbert function " + result.hf_witness.to_string() +
                         " differs from the input's " + result.hf_input.to_string() +
                         " (chain " + result.chain.type_chain().to_string() + ")";
        return result;
    }
    result.pass = true;
    return result;
}

}  // namespace egh
