#pragma once

#include <stdexcept>
#include <string>

namespace pnh {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define PNH_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                  \
    public:                                                      \
        explicit Name(const std::string& what) : Error(what) {} \
    }

// exact_core
PNH_DEFINE_ERROR(SingularSystem);
PNH_DEFINE_ERROR(ParseError);
// root_system
PNH_DEFINE_ERROR(UnsupportedType);
// weyl
PNH_DEFINE_ERROR(GroupTooLarge);
// flats
PNH_DEFINE_ERROR(TooManyFlats);
PNH_DEFINE_ERROR(NotWInvariant);
PNH_DEFINE_ERROR(NotBuilding);
PNH_DEFINE_ERROR(MissingV);
// nested / face_poset enumeration caps
PNH_DEFINE_ERROR(TooMany);
// halfspaces
PNH_DEFINE_ERROR(LemmaViolated);
PNH_DEFINE_ERROR(InvalidEpsilons);
// polytope
PNH_DEFINE_ERROR(NotInChamber);
PNH_DEFINE_ERROR(VerificationFailed);
PNH_DEFINE_ERROR(EmptyFacet);
// face_poset
PNH_DEFINE_ERROR(NotCrossingFacet);
PNH_DEFINE_ERROR(BuildingNotInvariant);
// fvector_formulas
PNH_DEFINE_ERROR(OutOfRange);

#undef PNH_DEFINE_ERROR

}  // namespace pnh
