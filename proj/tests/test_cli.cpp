// Copyright 2026 The hqcdfs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#ifndef HQC_DFS_BIN
#error "HQC_DFS_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string scratch(const std::string& name) { return "/tmp/hqcdfs_cli_" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args, const std::string& tag) {
  const std::string out_path = scratch(tag + ".out");
  const std::string cmd = std::string(HQC_DFS_BIN) + " " + args + " > " + out_path + " 2> " +
                          scratch("stderr.out");
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  return r;
}

std::vector<double> csv_row_values(const std::string& line) {
  std::vector<double> vals;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      vals.push_back(std::stod(item));
    } catch (...) {
      vals.push_back(std::numeric_limits<double>::quiet_NaN());
    }
  }
  return vals;
}

}  // namespace

TEST_CASE("gate command") {
  RunResult cnot = run("gate --kind cnot", "gate_cnot");
  CHECK(cnot.exit_code == 0);
  CHECK(cnot.out.find("fidelity: 1.000000000000") != std::string::npos);
  CHECK(cnot.out.find("U_logical") != std::string::npos);

  // trivial phases give the identity
  RunResult id = run("gate --kind c1u --delta 0 --theta 0 --alpha 0 --beta 0", "gate_id");
  CHECK(id.exit_code == 0);
  CHECK(id.out.find("fidelity: 1.000000000000") != std::string::npos);

  RunResult fredkin = run("gate --kind fredkin --eta 1.0", "gate_fredkin");
  CHECK(fredkin.exit_code == 0);

  // usage errors exit 2
  CHECK(run("gate --kind cnot --xi 1.0", "gate_badangles").exit_code == 2);
  CHECK(run("gate --kind nope", "gate_badkind").exit_code == 2);
  CHECK(run("", "no_command").exit_code == 2);
  CHECK(run("gate --kind c1u --xi 0.3 --delta 0.1", "gate_bothforms").exit_code == 2);
  CHECK(run("gate --kind c1u --placement 1,1", "gate_badplacement").exit_code == 2);
}

TEST_CASE("verify command emits a schema-versioned report") {
  RunResult ok = run("verify --kind cnot --out verify_cnot.json", "verify_cnot");
  CHECK(ok.exit_code == 0);
  auto doc = nlohmann::json::parse(slurp("verify_cnot.json"));
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["command"] == "verify");
  CHECK(doc["pass"] == true);
  CHECK(doc["gate"]["angles"]["delta"].get<double>() == Catch::Approx(M_PI / 2));
  bool saw_dfs = false;
  for (const auto& chk : doc["checks"]) {
    CHECK(chk["pass"] == true);
    CHECK(chk["residual"].get<double>() <= chk["tolerance"].get<double>());
    if (chk["name"] == "dfs_invariance") saw_dfs = true;
  }
  CHECK(saw_dfs);

  RunResult perturbed =
      run("verify --kind cnot --perturb 1e-3 --out verify_bad.json", "verify_bad");
  CHECK(perturbed.exit_code == 1);
  auto bad = nlohmann::json::parse(slurp("verify_bad.json"));
  CHECK(bad["pass"] == false);
  for (const auto& chk : bad["checks"])
    if (chk["name"] == "dfs_invariance") CHECK(chk["pass"] == false);

  // a stricter-than-float tolerance fails cleanly on a generic gate
  CHECK(run("verify --kind c1u --xi 0.3 --gamma 0.1 --alpha 0.2 --beta 0.4 "
            "--tolerance 1e-15",
            "verify_strict")
            .exit_code == 1);

  // csv format
  RunResult csv = run("verify --kind toffoli --format csv", "verify_csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("name,residual,tolerance,pass", 0) == 0);
}

TEST_CASE("sweep command") {
  RunResult sweep = run(
      "sweep --kind c1u --xi 0:3.141592653589793:11 --gamma 0 "
      "--alpha 1.5707963267948966 --beta 0",
      "sweep_xi");
  CHECK(sweep.exit_code == 0);
  std::stringstream ss(sweep.out);
  std::string line;
  std::getline(ss, line);
  CHECK(line ==
        "xi,gamma,alpha,beta,delta,theta,fidelity,phase_distance,cyclic,"
        "parallel_transport,dfs_invariance");
  int rows = 0;
  while (std::getline(ss, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 11);

  // a single-point grid is one row whose residuals match the verify command
  RunResult single = run("sweep --xi 0.3 --gamma 0.1 --alpha 0.2 --beta 0.4", "sweep_single");
  CHECK(single.exit_code == 0);
  {
    std::stringstream rows(single.out);
    std::string header, row;
    std::getline(rows, header);
    std::getline(rows, row);
    auto vals = csv_row_values(row);  // ..., cyclic, parallel_transport, dfs_invariance
    REQUIRE(vals.size() == 11);

    RunResult ver = run("verify --kind c1u --xi 0.3 --gamma 0.1 --alpha 0.2 --beta 0.4 "
                        "--format csv",
                        "verify_single");
    double cyc = -1, pt = -1, dfs = -1;
    std::stringstream vrows(ver.out);
    std::string vline;
    while (std::getline(vrows, vline)) {
      auto v = csv_row_values(vline);
      if (vline.rfind("cyclic,", 0) == 0) cyc = v[1];
      if (vline.rfind("parallel_transport,", 0) == 0) pt = v[1];
      if (vline.rfind("dfs_invariance,", 0) == 0) dfs = v[1];
    }
    CHECK(vals[8] == Catch::Approx(cyc).margin(1e-15));
    CHECK(vals[9] == Catch::Approx(pt).margin(1e-15));
    CHECK(vals[10] == Catch::Approx(dfs).margin(1e-15));
  }

  CHECK(run("sweep --xi 0:1:0", "sweep_empty").exit_code == 2);
  CHECK(run("sweep --kind fredkin", "sweep_badkind").exit_code == 2);
}

TEST_CASE("noise command") {
  RunResult noise = run(
      "noise --kind cnot --kappa 0,0.1 --model lindblad --out noise_cnot.json", "noise_cnot");
  CHECK(noise.exit_code == 0);
  auto doc = nlohmann::json::parse(slurp("noise_cnot.json"));
  CHECK(doc["rows"].size() == 2);
  for (const auto& row : doc["rows"]) {
    CHECK(row["encoded_fidelity"].get<double>() >= 1.0 - 1e-6);
  }
  // the unencoded baseline degrades with kappa
  double base0 = doc["rows"][0]["baseline_fidelity"].get<double>();
  double base1 = doc["rows"][1]["baseline_fidelity"].get<double>();
  CHECK(base0 >= 1.0 - 1e-6);
  CHECK(base1 < 1.0 - 1e-3);
  CHECK(base1 <= base0);

  // fixed seed, single sample: bit-identical reruns
  RunResult a = run("noise --kind cnot --model ensemble --kappa 0.5 --samples 1 --seed 9",
                    "noise_seed_a");
  RunResult b = run("noise --kind cnot --model ensemble --kappa 0.5 --samples 1 --seed 9",
                    "noise_seed_b");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("combined run") {
  RunResult all = run("all --kind cnot --kappa 0,1 --out all_cnot.json", "all_cnot");
  CHECK(all.exit_code == 0);
  auto doc = nlohmann::json::parse(slurp("all_cnot.json"));
  CHECK(doc["verify"]["pass"] == true);
  CHECK(doc["noise"]["pass"] == true);
  CHECK(doc["pass"] == true);
}
