#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace clanorb {

enum class Errc {
    MalformedToken,
    PairCountNotTwo,
    RankTooLarge,
    OddLength,
    LengthMismatch,
    InvalidPermutation,
    InvalidRoot,
    NotGraded,
    UnknownOrbit,
    SignatureMismatch,
    NotSymmetric,
    NotAntisymmetric,
    NotClosed,
    NotBelow,
    NeitherAntisymmetric,
    VersionMismatch,
    CorruptCache,
    BadFixture,
    BadConfig,
};

inline std::string_view errc_name(Errc e)
{
    switch (e) {
    case Errc::MalformedToken: return "MalformedToken";
    case Errc::PairCountNotTwo: return "PairCountNotTwo";
    case Errc::RankTooLarge: return "RankTooLarge";
    case Errc::OddLength: return "OddLength";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::InvalidRoot: return "InvalidRoot";
    case Errc::NotGraded: return "NotGraded";
    case Errc::UnknownOrbit: return "UnknownOrbit";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotAntisymmetric: return "NotAntisymmetric";
    case Errc::NotClosed: return "NotClosed";
    case Errc::NotBelow: return "NotBelow";
    case Errc::NeitherAntisymmetric: return "NeitherAntisymmetric";
    case Errc::VersionMismatch: return "VersionMismatch";
    case Errc::CorruptCache: return "CorruptCache";
    case Errc::BadFixture: return "BadFixture";
    case Errc::BadConfig: return "BadConfig";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace clanorb
