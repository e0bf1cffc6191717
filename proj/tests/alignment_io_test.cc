// Copyright 2026 The bitalign Authors.
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

#include "bitalign/alignment_io.h"

#include <cmath>

#include <gtest/gtest.h>

namespace bitalign {
namespace {

TEST(ParseAlignmentsTest, Forms) {
  const auto e = ParseAlignments(
      "# header comment\n"
      "0:0\n"
      "1,2:1\n"
      ":2\n"
      "3:\n"
      "4:3,4\t0.812500\n"
      "5:5\tNA\n");
  ASSERT_EQ(e.size(), 6u);
  EXPECT_EQ(e[0].src, (std::vector<std::size_t>{0}));
  EXPECT_EQ(e[0].line, 2u);
  EXPECT_EQ(e[1].src, (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(e[2].src.empty());
  EXPECT_TRUE(e[2].is_null());
  EXPECT_TRUE(e[3].tgt.empty());
  EXPECT_EQ(e[4].tgt, (std::vector<std::size_t>{3, 4}));
  ASSERT_TRUE(e[4].score.has_value());
  EXPECT_DOUBLE_EQ(*e[4].score, 0.8125);
  EXPECT_FALSE(e[5].score.has_value());
  EXPECT_FALSE(e[0].score.has_value());
}

TEST(ParseAlignmentsTest, CrlfAndBlankTail) {
  const auto e = ParseAlignments("0:0\r\n1:1\r\n");
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[1].tgt, (std::vector<std::size_t>{1}));
}

TEST(ParseAlignmentsTest, ErrorsNameTheLine) {
  for (const char* bad : {"0:0\n1-1\n", "0:0\nx:1\n", "0:0\n1:1\tabc\n",
                          "0:0\n1,,2:1\n", "0:0\n:\n", "0:0\n1:2:3\n"}) {
    try {
      ParseAlignments(bad);
      ADD_FAILURE() << "accepted: " << bad;
    } catch (const FormatError& err) {
      EXPECT_NE(std::string(err.what()).find("line 2"), std::string::npos)
          << err.what();
    }
  }
}

TEST(FormatAlignmentsTest, RoundTrip) {
  const AlignmentPath path{{{{0, 2}, {0, 1}, 0.91234567},
                            Deletion(2, 1),
                            Insertion(1, 3),
                            {{3, 4}, {2, 4}, 0.5}}};
  const std::string plain = FormatAlignments(path, false);
  EXPECT_EQ(plain, "0,1:0\n2:\n:1\n3:2,3\n");
  const std::string scored = FormatAlignments(path, true);
  EXPECT_EQ(scored, "0,1:0\t0.912346\n2:\tNA\n:1\tNA\n3:2,3\t0.500000\n");

  const auto back = ParseAlignments(scored);
  const auto direct = ToEntries(path);
  ASSERT_EQ(back.size(), direct.size());
  for (std::size_t k = 0; k < back.size(); ++k) {
    EXPECT_EQ(back[k].src, direct[k].src);
    EXPECT_EQ(back[k].tgt, direct[k].tgt);
  }
}

}  // namespace
}  // namespace bitalign
