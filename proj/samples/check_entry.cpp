// Binds a catalog entry to new parameters and compares both sides.
//   sample_check_entry [id] [name=value ...]

#include <cstdio>
#include <cstdlib>
#include <string>

#include "logint/verify.hpp"

int main(int argc, char** argv)
{
    using namespace logint;
    std::string id = argc > 1 ? argv[1] : "eq-diekama";
    ParamSet overrides;
    for (int i = 2; i < argc; ++i) {
        std::string arg = argv[i];
        auto eq = arg.find('=');
        if (eq == std::string::npos) {
            std::fprintf(stderr, "expected name=value, got '%s'\n", argv[i]);
            return 2;
        }
        overrides.set(arg.substr(0, eq), std::strtod(arg.c_str() + eq + 1, nullptr));
    }
    try {
        const CatalogEntry& e = bundled_catalog().entry(id);
        VerificationRecord r = verify_identity(e, bind(e, overrides), RunConfig{});
        std::printf("%s: %s\n  lhs %s\n  rhs %s\n  rel err %.2e\n", e.id.c_str(), to_string(r.status),
                    to_string(r.lhs).c_str(), to_string(r.rhs).c_str(), r.rel_err);
        return r.status == Status::fail ? 1 : 0;
    } catch (const Error& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    }
}
