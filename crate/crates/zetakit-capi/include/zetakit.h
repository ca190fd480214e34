/* C interface to the zetakit special-functions library. */

#ifndef ZETAKIT_H
#define ZETAKIT_H

#pragma once

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status of one call. Zero is success; the nonzero codes mirror the
 * library's error conditions, plus the two C-side failure modes.
 */
typedef enum ZkStatus {
  ZK_STATUS_OK = 0,
  /**
   * Evaluation at a pole of the target function.
   */
  ZK_STATUS_POLE = 1,
  /**
   * Input outside the validity region of the chosen representation.
   */
  ZK_STATUS_DOMAIN = 2,
  /**
   * The evaluation would be dominated by floating-point cancellation.
   */
  ZK_STATUS_CANCELLATION = 3,
  /**
   * An iteration failed to meet its tolerance within the level budget.
   */
  ZK_STATUS_NO_CONVERGENCE = 4,
  /**
   * Requested degree above the supported cap.
   */
  ZK_STATUS_DEGREE_CAP = 5,
  /**
   * A denominator on the evaluation path vanished (or nearly so).
   */
  ZK_STATUS_NEAR_ZERO_DENOMINATOR = 6,
  /**
   * Result magnitude outside binary64 range.
   */
  ZK_STATUS_OVERFLOW = 7,
  /**
   * Input outside the validated range of an oracle-grade routine.
   */
  ZK_STATUS_RANGE = 8,
  /**
   * File read/write failure.
   */
  ZK_STATUS_IO = 9,
  /**
   * A required pointer argument was null.
   */
  ZK_STATUS_NULL_POINTER = 100,
  /**
   * The call panicked; the result slot is untouched.
   */
  ZK_STATUS_PANIC = 101,
} ZkStatus;

/**
 * Opaque set of classified polynomial roots; obtain with
 * `zk_rootset_compute`, inspect with the accessor functions, release with
 * `zk_rootset_free`.
 */
typedef struct ZkRootSet ZkRootSet;

/**
 * A complex number as two binary64 components.
 */
typedef struct ZkComplex {
  double re;
  double im;
} ZkComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string; never freed.
 */
const char *zk_version(void);

/**
 * ζ(s) through the incomplete-gamma series with `k_terms` lattice terms
 * (6 is the library default). Fails with `Pole` at s = 1.
 */
enum ZkStatus zk_zeta(struct ZkComplex s, uint32_t k_terms, struct ZkComplex *out);

/**
 * The completed form xi(s) = s(s−1) ζ(s) Γ(s/2) π^{−s/2}, entire in s,
 * symmetric under s ↔ 1−s.
 */
enum ZkStatus zk_xi(struct ZkComplex s, uint32_t k_terms, struct ZkComplex *out);

/**
 * Upper incomplete gamma Γ(s, z) by the even continued fraction, stopped
 * at relative step `tol` (1e−14 is the library default).
 */
enum ZkStatus zk_upper_gamma(struct ZkComplex s,
                             struct ZkComplex z,
                             double tol,
                             struct ZkComplex *out);

/**
 * Lower incomplete gamma γ(s, z), complementary to `zk_upper_gamma`.
 */
enum ZkStatus zk_lower_gamma(struct ZkComplex s,
                             struct ZkComplex z,
                             double tol,
                             struct ZkComplex *out);

/**
 * Generalized Laguerre polynomial L_i^{(α)}(z) by the stable three-term
 * recurrence; exact for every finite input.
 */
enum ZkStatus zk_laguerre(size_t i,
                          struct ZkComplex alpha,
                          struct ZkComplex z,
                          struct ZkComplex *out);

/**
 * Kummer's confluent hypergeometric M(a, b, z) by its defining series.
 */
enum ZkStatus zk_kummer_m(struct ZkComplex a,
                          struct ZkComplex b,
                          struct ZkComplex z,
                          double tol,
                          struct ZkComplex *out);

/**
 * Tricomi's confluent hypergeometric U(a, b, z).
 */
enum ZkStatus zk_kummer_u(struct ZkComplex a,
                          struct ZkComplex b,
                          struct ZkComplex z,
                          double tol,
                          struct ZkComplex *out);

/**
 * Computes the classified roots of the degree-2n zeta approximant with
 * order shift `delta`, classification half-width `tau` around the critical
 * line (0.05 is the library default), and root-finder seed `seed`. On
 * success stores a handle that must be released with `zk_rootset_free`.
 */
enum ZkStatus zk_rootset_compute(double delta,
                                 size_t n,
                                 double tau,
                                 uint64_t seed,
                                 struct ZkRootSet **out);

/**
 * Number of roots in the set; 0 for a null handle.
 */
size_t zk_rootset_count(const struct ZkRootSet *rs);

/**
 * Fetches root `index` (sets sorted by imaginary then real part) and its
 * classification code: 0 on-critical-line, 1 off-line, 2 outside-strip,
 * 3 prefactor-zero. Fails with `Range` when `index` is out of bounds.
 */
enum ZkStatus zk_rootset_get(const struct ZkRootSet *rs,
                             size_t index,
                             struct ZkComplex *root,
                             int32_t *class_code);

/**
 * Releases a root set; accepts null as a no-op.
 */
void zk_rootset_free(struct ZkRootSet *rs);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZETAKIT_H */
