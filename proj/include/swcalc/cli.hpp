#pragma once

#include <ostream>
#include <string>
#include <vector>

// Command-line front end. run() is the whole program minus main(), so tests
// drive it in-process.
//
// Subcommands:
//   fibration <n>                 canonical factorization word + fiber census
//   verify-word <word>            SL(2,Z) evaluation and identity check
//   cfrac <p> <q>                 blowdown chain for C_{p,q} with checks
//   sw en <n>                     Seiberg-Witten polynomial of E(n)
//   build -f <recipe.json>        run a construction recipe
//   optimize <n>                  maximal c1^2 recipe at chi_h = n
//   geography <n> [--floor c]     realized c1^2 values with witnesses
//   certify -f <recipe.json> --r <r1,r2,...>   distinctness certificate
//
// --json switches any subcommand to a single JSON document on stdout.
// Exit codes: 0 success, 1 domain/resource error (message on stderr, or an
// {"error": ...} document in JSON mode), 2 usage error.

namespace swcalc::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swcalc::cli
