import { ApiClient } from "./api.js";
import { DashboardController } from "./controller.js";
import { parseLocale } from "./i18n.js";
import { render } from "./render.js";

const AUTO_REFRESH_MS = 60_000;

async function boot(): Promise<void> {
  const root = document.getElementById("app");
  if (root === null) {
    return;
  }

  const client = new ApiClient((path) => fetch(path));
  const params = new URLSearchParams(window.location.search);

  let batchId = params.get("batch");
  if (batchId === null) {
    const batches = await client.batches().catch(() => []);
    batchId = batches[0]?.batch_id ?? null;
  }
  if (batchId === null) {
    root.textContent = "no batches registered";
    return;
  }

  const controller = new DashboardController(
    client,
    batchId,
    parseLocale(params.get("locale")) ?? "en",
  );

  let timer: ReturnType<typeof setInterval> | null = null;
  const paint = () => {
    root.innerHTML = render(controller.state);
  };
  const syncTimer = () => {
    if (controller.state.autoRefresh && timer === null) {
      timer = setInterval(async () => {
        await controller.refresh();
        paint();
      }, AUTO_REFRESH_MS);
    } else if (!controller.state.autoRefresh && timer !== null) {
      clearInterval(timer);
      timer = null;
    }
  };

  root.addEventListener("click", async (event) => {
    const target = event.target as Element | null;
    if (target === null) {
      return;
    }

    const point = target.closest("[data-gas][data-index]");
    if (point !== null) {
      controller.selectPoint(
        point.getAttribute("data-gas") ?? "",
        Number(point.getAttribute("data-index")),
      );
      paint();
      return;
    }

    const action = target.closest("[data-action]")?.getAttribute("data-action");
    if (action === "refresh") {
      await controller.refresh();
      paint();
    } else if (action === "toggle-locale") {
      await controller.toggleLocale();
      paint();
    } else if (action === "auto") {
      controller.setAutoRefresh((target as HTMLInputElement).checked);
      syncTimer();
    }
  });

  await controller.refresh();
  paint();
}

void boot();
