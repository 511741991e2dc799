#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qeuler {

// Result of one identity check run.  The CLI serializes these to JSON;
// the fields mirror that schema (theorem label, bound, pass flag, first
// failing instance, and the full per-instance list).
struct Mismatch {
    long long n = 0;
    std::string lhs;
    std::string rhs;
};

struct Instance {
    std::string params;  // e.g. "n=3 j=1 lambda=(2,1)"
    bool pass = true;
    std::string lhs;
    std::string rhs;
};

struct Report {
    std::string theorem;
    long long n_or_N = 0;
    bool pass = true;
    std::optional<Mismatch> first_mismatch;
    std::vector<Instance> instances;

    void add(std::string params, long long n, bool ok,
             std::string lhs = "", std::string rhs = "") {
        if (!ok) {
            pass = false;
            if (!first_mismatch) first_mismatch = Mismatch{n, lhs, rhs};
        }
        instances.push_back(Instance{std::move(params), ok, std::move(lhs), std::move(rhs)});
    }
};

}  // namespace qeuler
