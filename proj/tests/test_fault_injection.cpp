#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "selfcheck.hpp"

// Linked against the build whose location probability carries a flipped skew sign.
TEST_CASE("self-check rejects the sign-flipped build") {
    std::ostringstream out;
    std::ostringstream err;
    CHECK(vgcdf::cli::run({"selfcheck", "--grid", "small"}, out, err) == vgcdf::cli::kSelfcheckFailed);

    bool consistency_failed = false;
    for (const auto& f : vgcdf::cli::run_selfcheck(vgcdf::cli::Grid::Small, 1e-9, {})) {
        if (f.family == "eq1eq2_vs_eq3") consistency_failed = !f.pass;
    }
    CHECK(consistency_failed);
}
