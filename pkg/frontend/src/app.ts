/** Browser entry point: connect to the designer service and mount the
 * designer UI into `#app`. */

import { DesignerApi } from "./api.js";
import { mountDesigner } from "./board.js";
import { DesignerStore } from "./store.js";

/** Inventory of the boxed set: four copies of each piece type. */
export const BOXED_CAPS: Record<number, number> = {
  1: 4,
  2: 4,
  3: 4,
  4: 4,
  5: 4,
  6: 4,
};

export async function bootstrap(
  root: HTMLElement,
  baseUrl: string,
  caps?: Record<number, number>,
): Promise<DesignerStore> {
  const api = new DesignerApi(baseUrl);
  const store = new DesignerStore(api);
  mountDesigner(root, store);
  await store.start(caps);
  return store;
}

declare global {
  interface Window {
    RAILGRID_SERVICE_URL?: string;
  }
}

if (typeof document !== "undefined" && document.getElementById("app") !== null) {
  const root = document.getElementById("app") as HTMLElement;
  const baseUrl = window.RAILGRID_SERVICE_URL ?? "http://127.0.0.1:8000";
  void bootstrap(root, baseUrl, BOXED_CAPS);
}
