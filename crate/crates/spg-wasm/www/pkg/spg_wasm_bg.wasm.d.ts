/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_graphdemo_free: (a: number, b: number) => void;
export const graphdemo_bits: (a: number) => number;
export const graphdemo_coloring: (a: number) => [number, number];
export const graphdemo_distance: (a: number, b: number, c: number) => [number, number, number];
export const graphdemo_max_clique: (a: number) => [number, number];
export const graphdemo_n: (a: number) => number;
export const graphdemo_neighbors: (a: number, b: number) => [number, number, number, number];
export const graphdemo_new: (a: number, b: number) => [number, number, number];
export const graphdemo_positions: (a: number) => [number, number];
export const graphdemo_random: (a: number, b: number) => number;
export const graphdemo_roles: (a: number) => [number, number];
export const graphdemo_spath: (a: number, b: number, c: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
