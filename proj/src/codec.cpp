#include "bnet/codec.hpp"

#include <memory>
#include <random>
#include <string>

namespace bnet::codec {

namespace {

bool is_base(char c) { return c == 'A' || c == 'C' || c == 'G' || c == 'T'; }
bool carries_one(char base) { return base == 'G' || base == 'T'; }

}  // namespace

DecodeError::DecodeError(std::size_t position, char found)
    : std::runtime_error("invalid base '" + std::string(1, found) + "' at position "
                         + std::to_string(position) + " (expected one of A, C, G, T)")
    , position_(position)
    , found_(found)
{
}

BitString BitString::parse(std::string_view text)
{
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1') {
            throw std::invalid_argument("invalid bit '" + std::string(1, text[i])
                                        + "' at position " + std::to_string(i));
        }
    }
    return BitString(std::string(text));
}

BaseString BaseString::parse(std::string_view text)
{
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!is_base(text[i]))
            throw DecodeError(i, text[i]);
    }
    return BaseString(std::string(text));
}

BasePolicy::BasePolicy(Chooser chooser, std::string name)
    : chooser_(std::move(chooser)), name_(std::move(name))
{
}

BasePolicy BasePolicy::canonical()
{
    return BasePolicy([](bool bit, std::size_t) { return bit ? 'G' : 'A'; }, "canonical");
}

BasePolicy BasePolicy::complement()
{
    return BasePolicy([](bool bit, std::size_t) { return bit ? 'T' : 'C'; }, "complement");
}

BasePolicy BasePolicy::alternating()
{
    return BasePolicy(
        [](bool bit, std::size_t pos) {
            bool const even = pos % 2 == 0;
            if (bit)
                return even ? 'G' : 'T';
            return even ? 'A' : 'C';
        },
        "alternating");
}

BasePolicy BasePolicy::seeded(std::uint64_t seed)
{
    // The generator is shared by copies of the policy; choices are a
    // function of (seed, call order), so one encode() call is reproducible
    // from a freshly constructed policy.
    auto engine = std::make_shared<std::mt19937_64>(seed);
    return BasePolicy(
        [engine](bool bit, std::size_t) {
            bool const pick = ((*engine)() >> 63) != 0;
            if (bit)
                return pick ? 'T' : 'G';
            return pick ? 'C' : 'A';
        },
        "seeded:" + std::to_string(seed));
}

BasePolicy BasePolicy::by_name(std::string_view name)
{
    if (name == "canonical")
        return canonical();
    if (name == "complement")
        return complement();
    if (name == "alternating")
        return alternating();
    constexpr std::string_view prefix = "seeded:";
    if (name.starts_with(prefix)) {
        std::string const digits(name.substr(prefix.size()));
        std::size_t used = 0;
        std::uint64_t seed = 0;
        try {
            seed = std::stoull(digits, &used);
        } catch (std::exception const&) {
            used = 0;
        }
        if (!digits.empty() && used == digits.size())
            return seeded(seed);
    }
    throw std::invalid_argument("unknown base policy '" + std::string(name) + "'");
}

BaseString encode(BitString const& bits, BasePolicy const& policy)
{
    std::string out;
    out.reserve(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        char const base = policy.choose(bits[i], i);
        if (!is_base(base) || carries_one(base) != bits[i]) {
            throw std::logic_error("policy '" + policy.name() + "' chose base '"
                                   + std::string(1, base) + "' for bit "
                                   + (bits[i] ? "1" : "0") + " at position "
                                   + std::to_string(i));
        }
        out.push_back(base);
    }
    return BaseString(std::move(out));
}

BitString decode(BaseString const& bases)
{
    std::string out;
    out.reserve(bases.size());
    for (char const c : bases.str())
        out.push_back(carries_one(c) ? '1' : '0');
    return BitString(std::move(out));
}

BitString decode(std::string_view bases) { return decode(BaseString::parse(bases)); }

}  // namespace bnet::codec
