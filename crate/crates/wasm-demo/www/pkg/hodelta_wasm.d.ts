/* tslint:disable */
/* eslint-disable */

/**
 * Exact and variational ground state for one coupling.
 */
export class GroundState {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly alpha_min: number;
    readonly g: number;
    readonly nu_exact: number;
    readonly nu_variational: number;
    readonly family: string;
}

/**
 * Trial energy at `n` evenly spaced alpha in `[lo, hi]`, as `[alpha, eps, alpha, eps, ...]`.
 */
export function energy_curve(g: number, lo: number, hi: number, n: number): Float64Array;

export function ground_state(g: number): GroundState;

/**
 * `[g, nu_exact, nu_variational, ...]` at `n` evenly spaced couplings in `[lo, hi]`.
 */
export function nu_sweep(lo: number, hi: number, n: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_get_groundstate_alpha_min: (a: number) => number;
    readonly __wbg_get_groundstate_g: (a: number) => number;
    readonly __wbg_get_groundstate_nu_exact: (a: number) => number;
    readonly __wbg_get_groundstate_nu_variational: (a: number) => number;
    readonly __wbg_groundstate_free: (a: number, b: number) => void;
    readonly energy_curve: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly ground_state: (a: number) => [number, number, number];
    readonly groundstate_family: (a: number) => [number, number];
    readonly nu_sweep: (a: number, b: number, c: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
