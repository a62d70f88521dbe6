/* Copyright 2026 The gwinv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stdout only; stderr is discarded.
Run run(const std::string& args) {
  std::string cmd = std::string("'") + GWINV_CLI_PATH + "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TEST(Cli, SeriesText) {
  auto r = run("series --n 1 --prec 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x_1: 0,1,1,1,1\nh_1: 0,1,-1,1,-1\na_1: 0,0,1,0,1\nb_1: 0,1,0,1,0\n");
}

TEST(Cli, SeriesCsv) {
  auto r = run("series --n 2 --prec 3 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "series,t0,t1,t2,t3\nx,0,1,2,3\nh,0,1,-2,5\na,0,0,2,0\nb,0,1,0,3\n");
}

TEST(Cli, Eval) {
  auto r = run("eval --inv 'f[1,2]' --form 'pf(t1,t2)' --field 'R((t1))((t2))' --mode H");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(t1).(t2)\n");
  r = run("eval --inv 'f[2,3]' --form 'pf(t1,t2)' --field 'R((t1))((t2))' --mode W");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("eval --inv 'f[2,1]' --form 'pf(t1)' --field 'R((t1))' --mode W").code, 3);
  EXPECT_EQ(run("eval --inv 'f[1,' --form 'pf(t1)' --field 'R((t1))' --mode W").code, 2);
  EXPECT_EQ(run("eval --inv 'f[1,1]' --form 'pf(t1)' --field 'Q' --mode W").code, 2);
  EXPECT_EQ(run("verify --suite bogus").code, 2);
  EXPECT_EQ(run("nonsense").code, 2);
}

TEST(Cli, VerifyJsonIsDeterministic) {
  const std::string args = "verify --suite lambda --samples 3 --seed 11 --format json";
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out,
            "{\"cases_failed\":0,\"cases_total\":15,\"config\":{\"d_max\":6,\"field\":\"\",\"mode\":\"both\","
            "\"n_max\":3,\"prec\":32,\"samples\":3,\"seed\":11},\"first_failure\":null,\"suite\":\"lambda\"}\n");
}

TEST(Cli, VerifySuitesPass) {
  for (const char* s : {"coh-ops", "lambda", "ram"})
    EXPECT_EQ(run(std::string("verify --suite ") + s + " --samples 5 --n-max 2 --d-max 4").code, 0) << s;
  EXPECT_EQ(run("verify --suite pi --samples 0").code, 0);
}

}  // namespace
