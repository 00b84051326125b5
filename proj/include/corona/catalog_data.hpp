#pragma once

#include <vector>

// Exact construction data for the built-in tilings. Generated from the
// hand-derived lattice bases and prototile coordinate tables; every entry is
// re-validated at load time (area balance, overlap audit, unit edges).
// Scalars are 8 integers (an,ad, bn,bd, cn,cd, dn,dd) encoding
// an/ad + (bn/bd)*sqrt2 + (cn/cd)*sqrt3 + (dn/dd)*sqrt6.

namespace corona::detail {

struct RawScalar {
    long long an, ad, bn, bd, cn, cd, dn, dd;
};

struct RawVec {
    RawScalar x, y;
};

struct RawEntry {
    const char* key;
    RawVec b1, b2;
    std::vector<std::vector<RawVec>> protos;
};

inline const std::vector<RawEntry>& raw_catalog() {
    static const std::vector<RawEntry> entries = {
{"3.3.3.3.3.3", {{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},
 {{1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}}, {
  {{{0,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}}},
  {{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{3,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}}},
 }},
{"3.3.3.3.6", {{5,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},
 {{1,2,0,1,0,1,0,1},{0,1,0,1,3,2,0,1}}, {
  {{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{-1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{-1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{-1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}}},
  {{{1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{1,1,0,1,0,1,0,1},{0,1,0,1,1,1,0,1}},{{0,1,0,1,0,1,0,1},{0,1,0,1,1,1,0,1}}},
  {{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{3,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}}},
  {{{1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{3,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{1,1,0,1,0,1,0,1},{0,1,0,1,1,1,0,1}}},
  {{{3,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{2,1,0,1,0,1,0,1},{0,1,0,1,1,1,0,1}},{{1,1,0,1,0,1,0,1},{0,1,0,1,1,1,0,1}}},
  {{{1,1,0,1,0,1,0,1},{0,1,0,1,1,1,0,1}},{{2,1,0,1,0,1,0,1},{0,1,0,1,1,1,0,1}},{{3,2,0,1,0,1,0,1},{0,1,0,1,3,2,0,1}}},
  {{{2,1,0,1,0,1,0,1},{0,1,0,1,1,1,0,1}},{{5,2,0,1,0,1,0,1},{0,1,0,1,3,2,0,1}},{{3,2,0,1,0,1,0,1},{0,1,0,1,3,2,0,1}}},
  {{{3,2,0,1,0,1,0,1},{0,1,0,1,3,2,0,1}},{{5,2,0,1,0,1,0,1},{0,1,0,1,3,2,0,1}},{{2,1,0,1,0,1,0,1},{0,1,0,1,2,1,0,1}}},
  {{{2,1,0,1,0,1,0,1},{0,1,0,1,1,1,0,1}},{{3,1,0,1,0,1,0,1},{0,1,0,1,1,1,0,1}},{{5,2,0,1,0,1,0,1},{0,1,0,1,3,2,0,1}}},
 }},
{"3.3.3.4.4", {{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},
 {{1,2,0,1,0,1,0,1},{1,1,0,1,1,2,0,1}}, {
  {{{0,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,1,0,1,0,1,0,1},{1,1,0,1,0,1,0,1}},{{0,1,0,1,0,1,0,1},{1,1,0,1,0,1,0,1}}},
  {{{0,1,0,1,0,1,0,1},{1,1,0,1,0,1,0,1}},{{1,1,0,1,0,1,0,1},{1,1,0,1,0,1,0,1}},{{1,2,0,1,0,1,0,1},{1,1,0,1,1,2,0,1}}},
  {{{1,1,0,1,0,1,0,1},{1,1,0,1,0,1,0,1}},{{3,2,0,1,0,1,0,1},{1,1,0,1,1,2,0,1}},{{1,2,0,1,0,1,0,1},{1,1,0,1,1,2,0,1}}},
 }},
{"3.3.4.3.4", {{-1,2,0,1,0,1,0,1},{-1,1,0,1,-1,2,0,1}},
 {{1,1,0,1,1,2,0,1},{-1,2,0,1,0,1,0,1}}, {
  {{{0,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{0,1,0,1,-1,2,0,1},{-1,2,0,1,0,1,0,1}},{{0,1,0,1,0,1,0,1},{-1,1,0,1,0,1,0,1}}},
  {{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{0,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}}},
  {{{0,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{1,2,0,1,-1,2,0,1},{1,2,0,1,1,2,0,1}},{{0,1,0,1,-1,2,0,1},{1,2,0,1,0,1,0,1}}},
  {{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{0,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{0,1,0,1,0,1,0,1},{-1,1,0,1,0,1,0,1}},{{1,1,0,1,0,1,0,1},{-1,1,0,1,0,1,0,1}}},
  {{{0,1,0,1,0,1,0,1},{-1,1,0,1,0,1,0,1}},{{1,2,0,1,0,1,0,1},{-1,1,0,1,-1,2,0,1}},{{1,1,0,1,0,1,0,1},{-1,1,0,1,0,1,0,1}}},
  {{{1,1,0,1,0,1,0,1},{-1,1,0,1,0,1,0,1}},{{1,1,0,1,1,2,0,1},{-1,2,0,1,0,1,0,1}},{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}}},
 }},
{"3.4.6.4", {{3,2,0,1,1,2,0,1},{1,2,0,1,1,2,0,1}},
 {{0,1,0,1,0,1,0,1},{1,1,0,1,1,1,0,1}}, {
  {{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{-1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{-1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{-1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}}},
  {{{1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{1,2,0,1,1,2,0,1},{1,2,0,1,1,2,0,1}},{{1,2,0,1,0,1,0,1},{1,1,0,1,1,2,0,1}}},
  {{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,1,0,1,1,2,0,1},{-1,2,0,1,0,1,0,1}},{{1,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}}},
  {{{-1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{-1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{-1,2,0,1,-1,2,0,1},{1,2,0,1,1,2,0,1}},{{-1,1,0,1,-1,2,0,1},{1,2,0,1,0,1,0,1}}},
  {{{-1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{1,2,0,1,0,1,0,1},{1,1,0,1,1,2,0,1}},{{-1,2,0,1,0,1,0,1},{1,1,0,1,1,2,0,1}}},
  {{{1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{1,2,0,1,1,2,0,1},{1,2,0,1,1,2,0,1}}},
 }},
{"3.6.3.6", {{2,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},
 {{1,1,0,1,0,1,0,1},{0,1,0,1,1,1,0,1}}, {
  {{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{-1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{-1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{-1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}}},
  {{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{3,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}}},
  {{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{3,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}}},
 }},
{"3.12.12", {{3,2,0,1,1,1,0,1},{1,1,0,1,1,2,0,1}},
 {{3,2,0,1,1,1,0,1},{-1,1,0,1,-1,2,0,1}}, {
  {{{1,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{1,2,0,1,1,2,0,1},{1,2,0,1,1,2,0,1}},{{1,2,0,1,0,1,0,1},{1,1,0,1,1,2,0,1}},{{-1,2,0,1,0,1,0,1},{1,1,0,1,1,2,0,1}},{{-1,2,0,1,-1,2,0,1},{1,2,0,1,1,2,0,1}},{{-1,1,0,1,-1,2,0,1},{1,2,0,1,0,1,0,1}},{{-1,1,0,1,-1,2,0,1},{-1,2,0,1,0,1,0,1}},{{-1,2,0,1,-1,2,0,1},{-1,2,0,1,-1,2,0,1}},{{-1,2,0,1,0,1,0,1},{-1,1,0,1,-1,2,0,1}},{{1,2,0,1,0,1,0,1},{-1,1,0,1,-1,2,0,1}},{{1,2,0,1,1,2,0,1},{-1,2,0,1,-1,2,0,1}},{{1,1,0,1,1,2,0,1},{-1,2,0,1,0,1,0,1}}},
  {{{1,2,0,1,0,1,0,1},{1,1,0,1,1,2,0,1}},{{1,2,0,1,1,2,0,1},{1,2,0,1,1,2,0,1}},{{1,2,0,1,1,2,0,1},{3,2,0,1,1,2,0,1}}},
  {{{1,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{1,1,0,1,1,2,0,1},{-1,2,0,1,0,1,0,1}},{{1,1,0,1,1,1,0,1},{0,1,0,1,0,1,0,1}}},
 }},
{"4.4.4.4", {{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},
 {{0,1,0,1,0,1,0,1},{1,1,0,1,0,1,0,1}}, {
  {{{0,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,1,0,1,0,1,0,1},{1,1,0,1,0,1,0,1}},{{0,1,0,1,0,1,0,1},{1,1,0,1,0,1,0,1}}},
 }},
{"4.6.12", {{3,1,0,1,1,1,0,1},{0,1,0,1,0,1,0,1}},
 {{3,2,0,1,1,2,0,1},{3,2,0,1,3,2,0,1}}, {
  {{{1,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{1,2,0,1,1,2,0,1},{1,2,0,1,1,2,0,1}},{{1,2,0,1,0,1,0,1},{1,1,0,1,1,2,0,1}},{{-1,2,0,1,0,1,0,1},{1,1,0,1,1,2,0,1}},{{-1,2,0,1,-1,2,0,1},{1,2,0,1,1,2,0,1}},{{-1,1,0,1,-1,2,0,1},{1,2,0,1,0,1,0,1}},{{-1,1,0,1,-1,2,0,1},{-1,2,0,1,0,1,0,1}},{{-1,2,0,1,-1,2,0,1},{-1,2,0,1,-1,2,0,1}},{{-1,2,0,1,0,1,0,1},{-1,1,0,1,-1,2,0,1}},{{1,2,0,1,0,1,0,1},{-1,1,0,1,-1,2,0,1}},{{1,2,0,1,1,2,0,1},{-1,2,0,1,-1,2,0,1}},{{1,1,0,1,1,2,0,1},{-1,2,0,1,0,1,0,1}}},
  {{{1,2,0,1,1,2,0,1},{1,2,0,1,1,2,0,1}},{{1,1,0,1,1,2,0,1},{1,2,0,1,1,1,0,1}},{{1,1,0,1,0,1,0,1},{1,1,0,1,1,1,0,1}},{{1,2,0,1,0,1,0,1},{1,1,0,1,1,2,0,1}}},
  {{{2,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{1,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{1,1,0,1,1,2,0,1},{-1,2,0,1,0,1,0,1}},{{2,1,0,1,1,2,0,1},{-1,2,0,1,0,1,0,1}}},
  {{{2,1,0,1,1,2,0,1},{1,2,0,1,1,1,0,1}},{{5,2,0,1,1,2,0,1},{1,2,0,1,1,2,0,1}},{{5,2,0,1,1,1,0,1},{1,1,0,1,1,2,0,1}},{{2,1,0,1,1,1,0,1},{1,1,0,1,1,1,0,1}}},
  {{{1,2,0,1,1,2,0,1},{1,2,0,1,1,2,0,1}},{{1,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{2,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{5,2,0,1,1,2,0,1},{1,2,0,1,1,2,0,1}},{{2,1,0,1,1,2,0,1},{1,2,0,1,1,1,0,1}},{{1,1,0,1,1,2,0,1},{1,2,0,1,1,1,0,1}}},
  {{{2,1,0,1,1,1,0,1},{1,1,0,1,1,1,0,1}},{{5,2,0,1,1,1,0,1},{1,1,0,1,1,2,0,1}},{{7,2,0,1,1,1,0,1},{1,1,0,1,1,2,0,1}},{{4,1,0,1,1,1,0,1},{1,1,0,1,1,1,0,1}},{{7,2,0,1,1,1,0,1},{1,1,0,1,3,2,0,1}},{{5,2,0,1,1,1,0,1},{1,1,0,1,3,2,0,1}}},
 }},
{"4.8.8", {{1,1,1,1,0,1,0,1},{0,1,0,1,0,1,0,1}},
 {{0,1,0,1,0,1,0,1},{1,1,1,1,0,1,0,1}}, {
  {{{1,2,1,2,0,1,0,1},{1,2,0,1,0,1,0,1}},{{1,2,0,1,0,1,0,1},{1,2,1,2,0,1,0,1}},{{-1,2,0,1,0,1,0,1},{1,2,1,2,0,1,0,1}},{{-1,2,-1,2,0,1,0,1},{1,2,0,1,0,1,0,1}},{{-1,2,-1,2,0,1,0,1},{-1,2,0,1,0,1,0,1}},{{-1,2,0,1,0,1,0,1},{-1,2,-1,2,0,1,0,1}},{{1,2,0,1,0,1,0,1},{-1,2,-1,2,0,1,0,1}},{{1,2,1,2,0,1,0,1},{-1,2,0,1,0,1,0,1}}},
  {{{1,2,1,1,0,1,0,1},{1,2,1,2,0,1,0,1}},{{1,2,1,2,0,1,0,1},{1,2,1,1,0,1,0,1}},{{1,2,0,1,0,1,0,1},{1,2,1,2,0,1,0,1}},{{1,2,1,2,0,1,0,1},{1,2,0,1,0,1,0,1}}},
 }},
{"6.6.6", {{3,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},
 {{3,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}}, {
  {{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{-1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{-1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{-1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}}},
 }},
{"2-02", {{2,1,0,1,1,1,0,1},{0,1,0,1,0,1,0,1}},
 {{1,1,0,1,1,2,0,1},{3,2,0,1,1,1,0,1}}, {
  {{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{-1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{-1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{-1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}}},
  {{{1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{1,2,0,1,1,2,0,1},{1,2,0,1,1,2,0,1}},{{1,2,0,1,0,1,0,1},{1,1,0,1,1,2,0,1}}},
  {{{1,2,0,1,1,2,0,1},{1,2,0,1,1,2,0,1}},{{1,2,0,1,1,2,0,1},{3,2,0,1,1,2,0,1}},{{1,2,0,1,0,1,0,1},{1,1,0,1,1,2,0,1}}},
  {{{1,1,0,1,1,2,0,1},{-1,2,0,1,0,1,0,1}},{{1,2,0,1,1,2,0,1},{-1,2,0,1,-1,2,0,1}},{{3,2,0,1,1,2,0,1},{-1,2,0,1,-1,2,0,1}}},
  {{{1,2,0,1,1,2,0,1},{1,2,0,1,1,2,0,1}},{{1,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{3,2,0,1,1,2,0,1},{1,2,0,1,1,2,0,1}}},
  {{{1,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,1,0,1,1,2,0,1},{-1,2,0,1,0,1,0,1}}},
  {{{1,1,0,1,1,1,0,1},{0,1,0,1,0,1,0,1}},{{1,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{1,1,0,1,1,2,0,1},{-1,2,0,1,0,1,0,1}}},
  {{{3,2,0,1,1,2,0,1},{3,2,0,1,1,2,0,1}},{{3,2,0,1,1,2,0,1},{1,2,0,1,1,2,0,1}},{{3,2,0,1,1,1,0,1},{1,1,0,1,1,2,0,1}}},
  {{{3,2,0,1,1,2,0,1},{1,2,0,1,1,2,0,1}},{{3,2,0,1,1,1,0,1},{0,1,0,1,1,2,0,1}},{{3,2,0,1,1,1,0,1},{1,1,0,1,1,2,0,1}}},
  {{{-1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{-1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{-1,1,0,1,-1,2,0,1},{-1,2,0,1,0,1,0,1}},{{-1,2,0,1,-1,2,0,1},{-1,2,0,1,-1,2,0,1}}},
  {{{1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{1,2,0,1,0,1,0,1},{1,1,0,1,1,2,0,1}},{{-1,2,0,1,0,1,0,1},{1,1,0,1,1,2,0,1}},{{-1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}}},
  {{{1,1,0,1,1,2,0,1},{-1,2,0,1,0,1,0,1}},{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{1,2,0,1,1,2,0,1},{-1,2,0,1,-1,2,0,1}}},
  {{{1,2,0,1,0,1,0,1},{0,1,0,1,1,2,0,1}},{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{1,2,0,1,1,2,0,1},{1,2,0,1,1,2,0,1}}},
  {{{1,2,0,1,1,2,0,1},{1,2,0,1,1,2,0,1}},{{3,2,0,1,1,2,0,1},{1,2,0,1,1,2,0,1}},{{3,2,0,1,1,2,0,1},{3,2,0,1,1,2,0,1}},{{1,2,0,1,1,2,0,1},{3,2,0,1,1,2,0,1}}},
  {{{3,2,0,1,1,2,0,1},{1,2,0,1,1,2,0,1}},{{1,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{1,1,0,1,1,1,0,1},{0,1,0,1,0,1,0,1}},{{3,2,0,1,1,1,0,1},{0,1,0,1,1,2,0,1}}},
 }},
{"2-15", {{3,2,0,1,1,2,0,1},{3,2,0,1,1,2,0,1}},
 {{3,2,0,1,1,2,0,1},{-3,2,0,1,-1,2,0,1}}, {
  {{{1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{0,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{-1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}}},
  {{{0,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{0,1,0,1,0,1,0,1},{1,1,0,1,0,1,0,1}},{{0,1,0,1,-1,2,0,1},{1,2,0,1,0,1,0,1}}},
  {{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{0,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}}},
  {{{-1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{0,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{0,1,0,1,-1,2,0,1},{1,2,0,1,0,1,0,1}},{{-1,2,0,1,-1,2,0,1},{1,2,0,1,-1,2,0,1}}},
  {{{0,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,1,0,1,0,1,0,1},{1,1,0,1,0,1,0,1}},{{0,1,0,1,0,1,0,1},{1,1,0,1,0,1,0,1}}},
  {{{3,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}}},
  {{{1,1,0,1,0,1,0,1},{1,1,0,1,0,1,0,1}},{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}}},
  {{{1,1,0,1,0,1,0,1},{1,1,0,1,0,1,0,1}},{{1,1,0,1,1,2,0,1},{3,2,0,1,0,1,0,1}},{{1,1,0,1,0,1,0,1},{2,1,0,1,0,1,0,1}}},
  {{{1,1,0,1,0,1,0,1},{1,1,0,1,0,1,0,1}},{{1,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{1,1,0,1,1,2,0,1},{3,2,0,1,0,1,0,1}}},
  {{{1,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{3,2,0,1,1,2,0,1},{1,2,0,1,-1,2,0,1}},{{2,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}}},
  {{{3,2,0,1,1,2,0,1},{-1,2,0,1,-1,2,0,1}},{{3,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{3,2,0,1,0,1,0,1},{-1,1,0,1,-1,2,0,1}}},
  {{{3,2,0,1,1,2,0,1},{1,2,0,1,-1,2,0,1}},{{3,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{3,2,0,1,1,2,0,1},{-1,2,0,1,-1,2,0,1}}},
  {{{2,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{3,2,0,1,1,2,0,1},{1,2,0,1,-1,2,0,1}},{{5,2,0,1,1,2,0,1},{1,2,0,1,-1,2,0,1}}},
  {{{2,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{5,2,0,1,1,2,0,1},{1,2,0,1,-1,2,0,1}},{{3,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}}},
  {{{1,1,0,1,0,1,0,1},{1,1,0,1,0,1,0,1}},{{1,1,0,1,0,1,0,1},{2,1,0,1,0,1,0,1}},{{0,1,0,1,0,1,0,1},{2,1,0,1,0,1,0,1}},{{0,1,0,1,0,1,0,1},{1,1,0,1,0,1,0,1}}},
  {{{1,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{3,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{3,2,0,1,1,2,0,1},{1,2,0,1,-1,2,0,1}}},
  {{{1,1,0,1,1,2,0,1},{3,2,0,1,0,1,0,1}},{{1,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{2,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{2,1,0,1,1,2,0,1},{3,2,0,1,0,1,0,1}}},
  {{{2,1,0,1,1,2,0,1},{3,2,0,1,0,1,0,1}},{{2,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{3,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{3,1,0,1,1,2,0,1},{3,2,0,1,0,1,0,1}}},
 }},
{"2-16", {{1,2,0,1,0,1,0,1},{1,1,0,1,1,2,0,1}},
 {{5,2,0,1,1,1,0,1},{0,1,0,1,1,2,0,1}}, {
  {{{1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{0,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{-1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}}},
  {{{0,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{0,1,0,1,0,1,0,1},{1,1,0,1,0,1,0,1}},{{0,1,0,1,-1,2,0,1},{1,2,0,1,0,1,0,1}}},
  {{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{0,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}}},
  {{{0,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{0,1,0,1,-1,2,0,1},{1,2,0,1,0,1,0,1}},{{-1,2,0,1,-1,2,0,1},{1,2,0,1,-1,2,0,1}},{{-1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}}},
  {{{0,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,1,0,1,0,1,0,1},{1,1,0,1,0,1,0,1}},{{0,1,0,1,0,1,0,1},{1,1,0,1,0,1,0,1}}},
  {{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{3,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}}},
  {{{1,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{3,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{2,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}}},
  {{{3,2,0,1,1,2,0,1},{-1,2,0,1,-1,2,0,1}},{{3,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{3,2,0,1,0,1,0,1},{-1,1,0,1,-1,2,0,1}}},
  {{{2,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{2,1,0,1,1,2,0,1},{-1,2,0,1,0,1,0,1}},{{2,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}}},
  {{{2,1,0,1,1,2,0,1},{1,2,0,1,0,1,0,1}},{{2,1,0,1,1,2,0,1},{-1,2,0,1,0,1,0,1}},{{2,1,0,1,1,1,0,1},{0,1,0,1,0,1,0,1}}},
  {{{3,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{1,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{1,2,0,1,0,1,0,1},{-1,1,0,1,-1,2,0,1}},{{3,2,0,1,0,1,0,1},{-1,1,0,1,-1,2,0,1}}},
  {{{2,1,0,1,0,1,0,1},{0,1,0,1,0,1,0,1}},{{3,2,0,1,0,1,0,1},{0,1,0,1,-1,2,0,1}},{{3,2,0,1,1,2,0,1},{-1,2,0,1,-1,2,0,1}},{{2,1,0,1,1,2,0,1},{-1,2,0,1,0,1,0,1}}},
 }},
    };
    return entries;
}

}  // namespace corona::detail
