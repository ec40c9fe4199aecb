#pragma once

// DNA payload codec. Bits ride on bases by partition: G and T carry a one,
// A and C carry a zero. Decoding is therefore fixed; encoding has a free
// choice per symbol, which is delegated to a BasePolicy.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bnet::codec {

class BaseString;
class BasePolicy;

class DecodeError : public std::runtime_error
{
public:
    DecodeError(std::size_t position, char found);

    std::size_t position() const noexcept { return position_; }
    char found() const noexcept { return found_; }

private:
    std::size_t position_;
    char found_;
};

/// Sequence of binary digits.
class BitString
{
public:
    BitString() = default;

    /// Throws std::invalid_argument on any character other than '0'/'1'.
    static BitString parse(std::string_view text);

    std::string const& str() const noexcept { return bits_; }
    std::size_t size() const noexcept { return bits_.size(); }
    bool operator[](std::size_t i) const { return bits_[i] == '1'; }

    friend bool operator==(BitString const&, BitString const&) = default;

private:
    explicit BitString(std::string bits) : bits_(std::move(bits)) {}
    friend BitString decode(BaseString const&);
    std::string bits_;
};

/// Sequence over {A, C, G, T}.
class BaseString
{
public:
    BaseString() = default;

    /// Throws DecodeError naming the first position outside the alphabet.
    static BaseString parse(std::string_view text);

    std::string const& str() const noexcept { return bases_; }
    std::size_t size() const noexcept { return bases_.size(); }

    friend bool operator==(BaseString const&, BaseString const&) = default;

private:
    explicit BaseString(std::string bases) : bases_(std::move(bases)) {}
    friend BaseString encode(BitString const&, BasePolicy const&);
    std::string bases_;
};

/// Chooses the base for one bit. The returned base is validated against
/// the GT=1 / AC=0 partition by encode().
class BasePolicy
{
public:
    using Chooser = std::function<char(bool bit, std::size_t position)>;

    explicit BasePolicy(Chooser chooser, std::string name = "custom");

    /// 1 -> G, 0 -> A.
    static BasePolicy canonical();
    /// 1 -> T, 0 -> C.
    static BasePolicy complement();
    /// Alternates G/T and A/C with position parity.
    static BasePolicy alternating();
    /// Independent fair choice within each class, reproducible from `seed`.
    static BasePolicy seeded(std::uint64_t seed);

    /// "canonical", "complement", "alternating" or "seeded:<n>".
    static BasePolicy by_name(std::string_view name);

    char choose(bool bit, std::size_t position) const { return chooser_(bit, position); }
    std::string const& name() const noexcept { return name_; }

private:
    Chooser chooser_;
    std::string name_;
};

BaseString encode(BitString const& bits, BasePolicy const& policy = BasePolicy::canonical());
BitString decode(BaseString const& bases);

/// Convenience overload: validates `bases` on the fly.
BitString decode(std::string_view bases);

}  // namespace bnet::codec
