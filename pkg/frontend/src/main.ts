import { ApiClient } from "./api.js";
import { App } from "./app.js";

const canvas = document.getElementById("plot") as HTMLCanvasElement;
const status = document.getElementById("status") as HTMLElement;

const app = new App(new ApiClient(""), canvas, status);
app.start().catch((err) => {
  status.textContent = `failed to start: ${err}`;
});
