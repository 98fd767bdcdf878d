#pragma once

// The schemes every cross-module property is checked against.

#include "amorph/families.hpp"

#include <string>
#include <vector>

struct NamedScheme {
    std::string name;
    amorph::AssociationScheme scheme;
};

inline std::vector<NamedScheme> bundled_schemes() {
    using namespace amorph;
    std::vector<NamedScheme> out;
    out.push_back({"klein4", abelian_group_scheme({2, 2})});
    out.push_back({"z5", abelian_group_scheme({5})});
    out.push_back({"paley7", paley(7)});
    out.push_back({"paley11", paley(11)});
    out.push_back({"paley19", paley(19)});
    out.push_back({"paley5", paley(5)});
    out.push_back({"paley13", paley(13)});
    out.push_back({"gf13-4", cyclotomic_scheme(FiniteField(13), 4)});
    out.push_back({"latin3", latin_net_scheme(cyclic_latin_square(3))});
    out.push_back({"latin4", latin_net_scheme(cyclic_latin_square(4))});
    return out;
}
