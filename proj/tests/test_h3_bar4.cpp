#include "doctest.h"
#include "snres/h3.hpp"

using namespace snres;

TEST_CASE("H_3 through Q agrees with the bar oracle for S_4") {
    const AbelianGroupInfo bar = h3_via_bar(4);
    CHECK(bar.str() == "Z/2 + Z/12");
    CHECK(h3_via_q(4) == bar);
}
