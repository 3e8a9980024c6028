#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "casimir/casimir_ops.hpp"
#include "casimir/cli.hpp"
#include "casimir/sparse_op.hpp"

using namespace casimir;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dims command prints the reference rows") {
  CHECK(cli({"dims", "--family", "so", "--n", "5"}).out == "35 10 1 35 5 14\n");
  CHECK(cli({"dims", "--family", "sp", "--n", "4"}).out == "35 10 1 14 35 5\n");
  CHECK(cli({"dims", "--family", "so", "--n", "8"}).out == "350 28 1 35 35 35 300\n");
  CHECK(cli({"dims", "--family", "so", "--n", "5"}).code == 0);
}

TEST_CASE("dims structured format") {
  CliResult r = cli({"dims", "--family", "so", "--n", "5", "--format", "structured"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "label=proj1 dim=35\n"
        "label=proj2 dim=10\n"
        "label=proj3 dim=1\n"
        "label=proj4 dim=35\n"
        "label=proj5 dim=5\n"
        "label=proj6 dim=14\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({"verify", "--family", "sp", "--n", "5"}).code == 2);
  CHECK(cli({"dims", "--family", "xx", "--n", "5"}).code == 2);
  CHECK(cli({"dims", "--n", "5"}).code == 2);
  CHECK(cli({"nonsense"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"export", "--family", "so", "--n", "5", "--op", "bogus"}).code == 2);
  CHECK(cli({"export", "--family", "so", "--n", "5", "--op", "E4"}).code == 2);
  CHECK(cli({"export", "--family", "so", "--n", "7", "--op", "so8:p1"}).code == 2);
  // the generic six are not defined at so(8)
  CHECK(cli({"export", "--family", "so", "--n", "8", "--op", "proj5"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("verify command exit codes and output") {
  CliResult r = cli({"verify", "--family", "so", "--n", "3", "--level", "full"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# subject so(3) level=full") == 0);
  CHECK(r.out.find("\nfail\t") == std::string::npos);

  CliResult structured =
      cli({"verify", "--family", "sp", "--n", "2", "--level", "fast", "--format", "structured"});
  CHECK(structured.code == 0);
  CHECK(structured.out.find("subject=sp(2) level=fast") == 0);
}

TEST_CASE("vogel command") {
  CliResult r = cli({"vogel", "--family", "so", "--n", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("alpha=-2 beta=4 gamma=3 t=5\n") == 0);
  CHECK(r.out.find("ad dim=21 c2=1 c_hat=-1/2 proj=proj2\n") != std::string::npos);
  CHECK(r.out.find("X2 dim=189 c2=2 c_hat=0 proj=proj1\n") != std::string::npos);

  // degenerate Vogel point still reports the parameters
  CliResult so4 = cli({"vogel", "--family", "so", "--n", "4"});
  CHECK(so4.code == 0);
  CHECK(so4.out.find("alpha=-2 beta=4 gamma=0 t=2\n") == 0);
  CHECK(so4.out.find("degenerate-point") != std::string::npos);
}

TEST_CASE("export command") {
  CliResult r = cli({"export", "--family", "sp", "--n", "2", "--op", "c_ad"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("SPARSEOP n=2 k=4 nnz=", 0) == 0);
  std::istringstream is(r.out);
  CHECK(read_sparse(is) == casimir_adjoint(make_spec(Family::Symplectic, 2)));

  // projector exports carry a manifest line
  CliResult p3 = cli({"export", "--family", "so", "--n", "5", "--op", "proj3"});
  CHECK(p3.code == 0);
  CHECK(p3.out.rfind("PROJ label=proj3 eigenvalue=-1/1 dim=1 primitive=1\n", 0) == 0);
  std::istringstream ps(p3.out);
  std::string manifest;
  std::getline(ps, manifest);
  CHECK(trace(read_sparse(ps)) == 1);

  CliResult e4 = cli({"export", "--family", "so", "--n", "8", "--op", "E4"});
  CHECK(e4.code == 0);
  CHECK(e4.out.rfind("SPARSEOP n=8 k=4 nnz=40320", 0) == 0);

  CliResult sd = cli({"export", "--family", "so", "--n", "8", "--op", "so8:sd"});
  CHECK(sd.code == 0);
  CHECK(sd.out.rfind("PROJ label=sd eigenvalue=-1/3 dim=35 primitive=1\n", 0) == 0);
}

TEST_CASE("exports are byte-identical across runs") {
  for (const char* op : {"c_f", "c_ad", "I", "P", "K", "proj1", "A4"}) {
    CliResult a = cli({"export", "--family", "so", "--n", "5", "--op", op});
    CliResult b = cli({"export", "--family", "so", "--n", "5", "--op", op});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("duality command") {
  CliResult r = cli({"duality", "--n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# subject duality n=6") == 0);
}

TEST_CASE("fast verify through the CLI") {
  CHECK(cli({"verify", "--family", "so", "--n", "7", "--level", "fast"}).code == 0);
  CHECK(cli({"dims", "--family", "sp", "--n", "2"}).out == "0 3 1 0 5 0\n");
}

TEST_CASE("--out writes the same bytes as stdout") {
  std::string path = "cli_out_test.sparse";
  CliResult direct = cli({"export", "--family", "so", "--n", "3", "--op", "c_ad"});
  CHECK(cli({"export", "--family", "so", "--n", "3", "--op", "c_ad", "--out", path}).code == 0);
  std::ifstream f(path, std::ios::binary);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("CASIMIR_MAX_N caps the dimension") {
  setenv("CASIMIR_MAX_N", "5", 1);
  CHECK(cli({"dims", "--family", "so", "--n", "7"}).code == 2);
  CHECK(cli({"dims", "--family", "so", "--n", "5"}).code == 0);
  setenv("CASIMIR_MAX_N", "junk", 1);
  CHECK(cli({"dims", "--family", "so", "--n", "5"}).code == 2);
  unsetenv("CASIMIR_MAX_N");
  CHECK(cli({"dims", "--family", "so", "--n", "7"}).code == 0);
}
