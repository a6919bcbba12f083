const http = require('http');
const { URL } = require('url');

const routes = new Map();

function register(method, pathname, handler) {
  routes.set(`${method} ${pathname}`, handler);
}

function parseBody(req) {
  return new Promise((resolve, reject) => {
    let data = '';
    req.on('data', (chunk) => { data += chunk; });
    req.on('end', () => {
      try {
        resolve(data ? JSON.parse(data) : {});
      } catch (err) {
        reject(err);
      }
    });
  });
}

register('GET', '/health', async () => ({ status: 200, body: { ok: true } }));
register('POST', '/echo', async (req) => ({ status: 200, body: await parseBody(req) }));

const server = http.createServer(async (req, res) => {
  const url = new URL(req.url, `http://${req.headers.host}`);
  const handler = routes.get(`${req.method} ${url.pathname}`);
  if (!handler) {
    res.writeHead(404, { 'Content-Type': 'application/json' });
    res.end(JSON.stringify({ error: 'not found' }));
    return;
  }
  try {
    const { status, body } = await handler(req);
    res.writeHead(status, { 'Content-Type': 'application/json' });
    res.end(JSON.stringify(body));
  } catch (err) {
    res.writeHead(500);
    res.end(String(err && err.message));
  }
});

const port = Number(process.env.PORT || 8080);
server.listen(port, () => console.log(`listening on ${port}`));
