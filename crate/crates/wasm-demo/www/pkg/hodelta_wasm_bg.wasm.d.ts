/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_get_groundstate_alpha_min: (a: number) => number;
export const __wbg_get_groundstate_g: (a: number) => number;
export const __wbg_get_groundstate_nu_exact: (a: number) => number;
export const __wbg_get_groundstate_nu_variational: (a: number) => number;
export const __wbg_groundstate_free: (a: number, b: number) => void;
export const energy_curve: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const ground_state: (a: number) => [number, number, number];
export const groundstate_family: (a: number) => [number, number];
export const nu_sweep: (a: number, b: number, c: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
