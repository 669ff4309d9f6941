#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

std::string slurp(const std::string& name)
{
    std::ifstream in(std::string(STEENROD_GOLDEN_DIR) + "/" + name);
    REQUIRE_MESSAGE(in, "missing golden file " << name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void compare(const std::string& name, std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = steenrod::cli::run(args, out, err);
    CHECK(code == 0);
    INFO("golden file " << name);
    CHECK(out.str() == slurp(name));
}

}  // namespace

TEST_CASE("golden JSON at p = 3")
{
    compare("verify_p3.json", {"verify", "-p", "3", "--format", "json", "all"});
    compare("table_L2_p3.json", {"table", "L2", "-p", "3", "--format", "json"});
    compare("table_L20_p3.json", {"table", "L20", "-p", "3", "--format", "json"});
    compare("table_L21_p3.json", {"table", "L21", "-p", "3", "--format", "json"});
    compare("dickson_n2_s0_p3.json", {"dickson", "-p", "3", "-n", "2", "-s", "0", "--format", "json"});
    compare("dickson_n2_s1_p3.json", {"dickson", "-p", "3", "-n", "2", "-s", "1", "--format", "json"});
    compare("apply_St01_L2_p3.json", {"apply", "-p", "3", "St(0,1)", "L2", "--format", "json"});
}
