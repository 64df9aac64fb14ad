/* tslint:disable */
/* eslint-disable */

/**
 * Exact rational linear-precision test for the curve with weights
 * `w_0, ..., w_n` given as a comma separated list of rationals.
 */
export function classify_weights(weights: string): string;

/**
 * Blending values of the pentagon at `(s, t)`: the linear-precision ones
 * computed by IPF and the toric Bézier ones, with both tautological maps.
 * Returns JSON; `{"error": ...}` when the point is not inside the domain.
 */
export function compare_pentagon(s: number, t: number): string;

/**
 * `[xmin, xmax, ymin, ymax]` of the patch domain, empty for unknown names.
 */
export function domain_bounds(name: string): Float64Array;

/**
 * `|tau(x) - x|` on an `n x n` grid over the bounding box, row-major with
 * `x` varying fastest starting from the bottom row; NaN outside the domain.
 */
export function precision_field(name: string, n: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly classify_weights: (a: number, b: number) => [number, number];
    readonly compare_pentagon: (a: number, b: number) => [number, number];
    readonly domain_bounds: (a: number, b: number) => [number, number];
    readonly precision_field: (a: number, b: number, c: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
