/* tslint:disable */
/* eslint-disable */

export class GraphDemo {
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Bits used by the structure, summed over components.
     */
    bits(): number;
    /**
     * Color of each vertex; the largest color equals the clique size.
     */
    coloring(): Uint32Array;
    /**
     * -1 when unreachable.
     */
    distance(u: number, v: number): number;
    max_clique(): Uint32Array;
    n(): number;
    neighbors(v: number): Uint32Array;
    constructor(text: string);
    /**
     * `Π[1..=n]`, for drawing the diagram.
     */
    positions(): Uint32Array;
    /**
     * Uniform random permutation graph on `n` vertices.
     */
    static random(n: number, seed: number): GraphDemo;
    /**
     * Per vertex: 1 = A, 2 = B, 3 = both (isolated), 0 = neither.
     */
    roles(): Uint8Array;
    spath(u: number, v: number): Uint32Array;
}

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_graphdemo_free: (a: number, b: number) => void;
    readonly graphdemo_bits: (a: number) => number;
    readonly graphdemo_coloring: (a: number) => [number, number];
    readonly graphdemo_distance: (a: number, b: number, c: number) => [number, number, number];
    readonly graphdemo_max_clique: (a: number) => [number, number];
    readonly graphdemo_n: (a: number) => number;
    readonly graphdemo_neighbors: (a: number, b: number) => [number, number, number, number];
    readonly graphdemo_new: (a: number, b: number) => [number, number, number];
    readonly graphdemo_positions: (a: number) => [number, number];
    readonly graphdemo_random: (a: number, b: number) => number;
    readonly graphdemo_roles: (a: number) => [number, number];
    readonly graphdemo_spath: (a: number, b: number, c: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
