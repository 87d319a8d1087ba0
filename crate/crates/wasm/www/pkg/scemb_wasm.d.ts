/* tslint:disable */
/* eslint-disable */

export class DemoModel {
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Word Mover's Distance between two snippets.
     */
    distance(first: string, second: string, language: string): number;
    /**
     * JSON array of `{word, cosine}`.
     */
    neighbors(query: string, k: number): string;
    /**
     * Train on pasted source code. Runs on the calling thread.
     */
    constructor(source: string, language: string, dim: number, epochs: number, seed: bigint);
    readonly vocabulary: string[];
}

/**
 * Cleansed identifier tokens of `source`.
 */
export function cleanse(source: string, language: string): string[];

/**
 * Language names accepted by the other functions.
 */
export function languages(): string[];

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_demomodel_free: (a: number, b: number) => void;
    readonly cleanse: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly demomodel_distance: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
    readonly demomodel_neighbors: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly demomodel_new: (a: number, b: number, c: number, d: number, e: number, f: number, g: bigint) => [number, number, number];
    readonly demomodel_vocabulary: (a: number) => [number, number];
    readonly languages: () => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __externref_drop_slice: (a: number, b: number) => void;
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
