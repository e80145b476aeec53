#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fmdraw/labeler_factory.hpp"
#include "fmdraw/oracle_labeler.hpp"
#include "support/test_support.hpp"

using namespace fmdraw;
using namespace fmdraw::test;

TEST_CASE("oracle labeler: append at end needs no relabels") {
  OracleLabeler lab;
  auto a = lab.insert_after(kNullAnchor);
  CHECK(a.assigned == 1);
  auto b = lab.insert_after(a.handle);
  CHECK(b.assigned == 2);
  CHECK(b.relabels.empty());
}

TEST_CASE("oracle labeler: middle insert re-packs the suffix") {
  OracleLabeler lab;
  auto a = lab.insert_after(kNullAnchor);
  auto b = lab.insert_after(a.handle);
  auto c = lab.insert_after(a.handle);  // between a and b
  CHECK(c.assigned == 2);
  REQUIRE(c.relabels.size() == 1);
  CHECK_FALSE(c.relabels[0].is_bulk());
  CHECK(c.relabels[0].single().handle == b.handle);
  CHECK(c.relabels[0].single().old_label == 2);
  CHECK(c.relabels[0].single().new_label == 3);
  CHECK(lab.label_of(a.handle) == 1);
  CHECK(lab.label_of(c.handle) == 2);
  CHECK(lab.label_of(b.handle) == 3);
}

TEST_CASE("oracle labeler: insert_before shifts the anchor") {
  OracleLabeler lab;
  auto a = lab.insert_after(kNullAnchor);
  auto d = lab.insert_before(a.handle);
  CHECK(d.assigned == 1);
  REQUIRE(d.relabels.size() == 1);
  CHECK(d.relabels[0].single().handle == a.handle);
  CHECK(lab.label_of(d.handle) == 1);
  CHECK(lab.label_of(a.handle) == 2);
}

TEST_CASE("oracle labeler: dual calls produce the same order") {
  OracleLabeler l1, l2;
  auto a1 = l1.insert_after(kNullAnchor);
  auto b1 = l1.insert_after(a1.handle);
  auto c1 = l1.insert_after(a1.handle);
  auto a2 = l2.insert_after(kNullAnchor);
  auto b2 = l2.insert_after(a2.handle);
  auto c2 = l2.insert_before(b2.handle);
  CHECK(l1.label_of(a1.handle) == l2.label_of(a2.handle));
  CHECK(l1.label_of(b1.handle) == l2.label_of(b2.handle));
  CHECK(l1.label_of(c1.handle) == l2.label_of(c2.handle));
}

TEST_CASE("oracle labeler: labels are a permutation of 1..n") {
  OracleLabeler lab;
  auto a = lab.insert_after(kNullAnchor);
  auto b = lab.insert_after(a.handle);
  auto c = lab.insert_after(a.handle);
  std::vector<Label> labels = {lab.label_of(a.handle), lab.label_of(b.handle),
                               lab.label_of(c.handle)};
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<Label>{1, 2, 3});
}

TEST_CASE("stale handle is rejected") {
  OracleLabeler lab;
  auto a = lab.insert_after(kNullAnchor);
  (void)a;
  CHECK_THROWS_AS(lab.label_of(ElementHandle{42}), Error);
  CHECK_THROWS_AS(lab.insert_after(ElementHandle{42}), Error);
}

TEST_CASE("apply_relabels: uniform bulk shift") {
  LabelMap m;
  ElementHandle a{1}, b{2};
  m.place(a, 1);
  m.place(b, 2);
  auto out = apply_relabels(m, {RelabelOp::make_bulk(1, 2, +3)});
  CHECK(out.label_of(a) == 4);
  CHECK(out.label_of(b) == 5);
}

TEST_CASE("apply_relabels: collision/reorder is rejected") {
  LabelMap m;
  m.place(ElementHandle{1}, 1);
  m.place(ElementHandle{2}, 2);
  CHECK_THROWS_AS(apply_relabels(m, {RelabelOp::make_bulk(2, 2, -2)}), Error);
}

TEST_CASE("apply_relabels: single collision is rejected") {
  LabelMap m;
  m.place(ElementHandle{1}, 1);
  m.place(ElementHandle{2}, 2);
  CHECK_THROWS_AS(
      apply_relabels(m, {RelabelOp::make_single(ElementHandle{1}, 1, 2)}),
      Error);
}

TEST_CASE("random sequences match the linked-list reference") {
  std::mt19937_64 rng(7);
  OracleLabeler lab;
  auto res = exercise(lab, WorkloadKind::random_positions, 1000, rng);
  CHECK(res.order_matches);
  CHECK(res.bulks == 0);
}

TEST_CASE("interleaved before/after matches reference on 500 ops") {
  std::mt19937_64 rng(11);
  OracleLabeler lab;
  auto res = exercise(lab, WorkloadKind::random_positions, 500, rng);
  CHECK(res.order_matches);
}
