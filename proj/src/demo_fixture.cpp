#include "dtms/demo_fixture.hpp"

namespace dtms::demo {
namespace {

WorkedExample build() {
  WorkedExample ex;
  ex.params = GroupParams{47, 23, 25, HashMode::fixture({{"challenge", 9}})};

  ex.polynomial.coefficients = {13, 0, 0, 0, 18};
  ex.masking_key = 14;
  ex.receiver = KeyPair{9, 2};

  const long uids[7] = {1, 2, 3, 4, 5, 6, 7};
  const long xs[7] = {13, 18, 19, 20, 17, 22, 15};
  const long ys[7] = {16, 4, 6, 9, 34, 32, 36};
  const long nonces[7] = {8, 22, 10, 17, 14, 16, 21};
  const long f_values[7] = {2, 21, 16, 3, 14, 14, 22};
  for (int i = 0; i < 7; ++i) {
    ex.members.push_back(FixedMemberInput{member_id(uids[i]), ys[i], nonces[i], f_values[i]});
    ex.member_secrets[member_id(uids[i])] = xs[i];
  }

  ex.subset = {member_id(2), member_id(4), member_id(5), member_id(6), member_id(7)};
  ex.nonces = {{member_id(2), {18, 17}},
               {member_id(4), {17, 19}},
               {member_id(5), {14, 13}},
               {member_id(6), {19, 21}},
               {member_id(7), {16, 18}}};
  ex.lambda = {{member_id(2), 12},
               {member_id(4), 10},
               {member_id(5), 15},
               {member_id(6), 4},
               {member_id(7), 6}};
  ex.message = utf8_bytes("m");

  ex.expected_l = {10, 20, 3, 20, 5, 7, 20};
  ex.expected_m = {3, 9, 21, 9, 12, 27, 9};
  ex.expected_n = {17, 32, 3, 34, 24, 7, 37};
  ex.expected_v = {41, 29, 1, 19, 38, 14, 44};
  ex.expected_y_s = 16;
  ex.expected_w = 2;

  ex.expected_triples = {{member_id(2), {18, 4, 3}},
                         {member_id(4), {8, 34, 8}},
                         {member_id(5), {3, 24, 7}},
                         {member_id(6), {14, 6, 25}},
                         {member_id(7), {12, 7, 34}}};
  ex.expected_u_s = 8;
  ex.expected_v_s = 36;
  ex.expected_w_s = 14;
  ex.expected_r_s = 9;
  ex.expected_ms = {{member_id(2), 10},
                    {member_id(4), 16},
                    {member_id(5), 6},
                    {member_id(6), 5},
                    {member_id(7), 5}};
  ex.expected_s = {{member_id(2), 16},
                   {member_id(4), 0},
                   {member_id(5), 22},
                   {member_id(6), 18},
                   {member_id(7), 15}};
  ex.expected_s_s = 2;
  ex.expected_e = 18;
  ex.expected_r_r = 36;
  ex.expected_mu = 16;

  ex.zk_u = 9;
  ex.zk_v = 11;
  ex.zk_alpha = 37;
  ex.expected_zk_w = 25;
  ex.expected_zk_beta = 36;
  ex.expected_zk_gamma = 9;
  return ex;
}

}  // namespace

const WorkedExample& worked_example() {
  static const WorkedExample instance = build();
  return instance;
}

DealerSetupResult worked_example_setup() {
  const WorkedExample& ex = worked_example();
  return dealer_setup_fixed(ex.params, 5, ex.members, ex.polynomial, ex.masking_key);
}

}  // namespace dtms::demo
