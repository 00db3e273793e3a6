#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rnckit/serialize.hpp"

namespace rnckit::cli {

enum class ExitCode : int {
    ok = 0,
    usage = 1,
    parse = 2,
    not_generic = 3,
    no_curve = 4,  // an obstruction certificate was produced
    unsupported = 5,
    bad_shape = 6,
    obstruction_fails = 7,
    verification_failed = 8,
    input = 9,  // the input file could not be read
    internal = 10,
};

struct CommandOutput {
    Json doc;          // versioned structured result
    std::string text;  // human-readable rendering
    ExitCode code = ExitCode::ok;
};

/// The subcommands on already-parsed documents. Library errors propagate.
CommandOutput construct_command(const Json& datum);
/// `doc` is a datum plus "curve", given by forms or by a top/bottom grid.
CommandOutput verify_command(const Json& doc);
CommandOutput obstruct_command(const Json& datum);
CommandOutput expect_command(int n, int p, int l);
/// `doc` is a datum (double points and double spaces) plus "degree".
CommandOutput hilbert_command(const Json& doc);
CommandOutput ah_suite_command(std::uint64_t seed);
CommandOutput equivalent_command(const Json& a, const Json& b);
/// With `oracle`, the datum is read off a random curve, which is emitted too.
CommandOutput random_datum_command(int n, int p, int l, std::uint64_t seed, bool oracle);

/// Runs one subcommand. `args` excludes the program name. Documents are read
/// from the named file or, for "-" or no file, from `in`. Output goes to
/// `out` (structured or text), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rnckit::cli
